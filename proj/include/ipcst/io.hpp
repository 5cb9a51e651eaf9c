#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ipcst/graph.hpp"

namespace ipcst {

// Instance text format, one record per line:
//   v <id> <prize>
//   e <id> <u> <v> <cost>
//   root <id>
// Rationals are "num/den" or a bare integer. Blank lines and lines starting
// with '#' are ignored.

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::int64_t parse_int(std::string_view s, std::size_t line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad integer '" +
                                           std::string(s) + "'");
  return value;
}

}  // namespace detail

inline InstanceDescription parse_instance_description(std::string_view text) {
  InstanceDescription d;
  bool have_root = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    const auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    auto rational_at = [&](std::size_t i) {
      try {
        return parse_rational(tok[i]);
      } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
      }
    };
    if (tok[0] == "v" && tok.size() == 3) {
      d.vertices.push_back({detail::parse_int(tok[1], line_no), rational_at(2)});
    } else if (tok[0] == "e" && tok.size() == 5) {
      d.edges.push_back({detail::parse_int(tok[1], line_no), detail::parse_int(tok[2], line_no),
                         detail::parse_int(tok[3], line_no), rational_at(4)});
    } else if (tok[0] == "root" && tok.size() == 2) {
      if (have_root) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": second root");
      d.root = detail::parse_int(tok[1], line_no);
      have_root = true;
    } else {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": unrecognised record");
    }
  }
  if (!have_root) throw Error(ErrorCode::ParseError, "missing root record");
  return d;
}

inline Instance parse_instance(std::string_view text) {
  return build_instance(parse_instance_description(text));
}

inline Instance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

inline std::string serialize_instance(const Graph& g) {
  std::ostringstream out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    out << "v " << g.label(v) << ' ' << to_string(g.prize(v)) << '\n';
  for (const Edge& e : g.edges())
    out << "e " << e.id << ' ' << g.label(e.u) << ' ' << g.label(e.v) << ' ' << to_string(e.cost) << '\n';
  out << "root " << g.label(g.root()) << '\n';
  return out.str();
}

}  // namespace ipcst
