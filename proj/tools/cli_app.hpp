#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ipcst/export.hpp"
#include "ipcst/io.hpp"
#include "ipcst/ipcst.hpp"

namespace ipcst::cli {

struct InputOptions {
  std::string instance_path;
  GeneratorSpec spec;
  std::string chi = "1", delta = "1/100", eps = "1/10", cost = "1";
};

struct RunOptions {
  InputOptions input;
  std::string algorithm = "graph-greedy";
  std::string alpha;
  std::string mu;
  std::optional<int> ell;
  std::size_t max_edges = kDefaultEnumerationBound;
  std::string out_dir;
};

inline void add_input_options(CLI::App& cmd, InputOptions& in) {
  cmd.add_option("-i,--instance", in.instance_path, "Instance file");
  cmd.add_option("--family", in.spec.family,
                 "Generator family: fig1 fig4 fig5 fig6a fig6b fig7 fig8 random-tree random-graph");
  cmd.add_option("--chi", in.chi, "chi parameter (p/q)");
  cmd.add_option("--delta", in.delta, "delta parameter (p/q)");
  cmd.add_option("--eps", in.eps, "eps parameter (p/q)");
  cmd.add_option("--cost", in.cost, "cost parameter (p/q)");
  cmd.add_option("--k", in.spec.k, "k parameter");
  cmd.add_option("--n", in.spec.n, "number of vertices or copies");
  cmd.add_option("--m", in.spec.m, "number of edges");
  cmd.add_option("--seed", in.spec.seed, "random seed");
}

inline GeneratorSpec resolve_spec(const InputOptions& in) {
  GeneratorSpec s = in.spec;
  s.chi = parse_rational(in.chi);
  s.delta = parse_rational(in.delta);
  s.eps = parse_rational(in.eps);
  s.cost = parse_rational(in.cost);
  return s;
}

inline Instance load(const InputOptions& in) {
  if (!in.instance_path.empty()) return read_instance(in.instance_path);
  if (in.spec.family.empty()) throw Error(ErrorCode::BadParameter, "need --instance or --family");
  return generate(resolve_spec(in));
}

/// "p/q", or a multiple of chi or gamma such as "chi", "3chi", "1/2gamma".
inline Rational resolve_amount(const std::string& text, const Graph& g, std::size_t bound) {
  auto scaled = [&](const std::string& suffix, auto&& base) -> std::optional<Rational> {
    if (text.size() < suffix.size() || text.compare(text.size() - suffix.size(), suffix.size(), suffix) != 0)
      return std::nullopt;
    const std::string factor = text.substr(0, text.size() - suffix.size());
    return (factor.empty() ? Rational(1) : parse_rational(factor)) * base();
  };
  if (auto v = scaled("chi", [&] { return eccentricity(g); })) return *v;
  if (auto v = scaled("gamma", [&] { return longest_root_path(g, bound); })) return *v;
  return parse_rational(text);
}

struct Solved {
  IncrementalSolution solution;
  std::string trace;
};

inline Solved run_algorithm(const std::string& algorithm, const Graph& g, std::size_t bound) {
  if (algorithm == "tree-greedy") {
    auto r = density_greedy_tree(g);
    return {r.solution, trace_jsonl(g, r.trace)};
  }
  if (algorithm == "graph-greedy") {
    auto r = density_greedy_graph(g, bound);
    return {r.solution, trace_jsonl(g, r.trace)};
  }
  if (algorithm == "capacity-scaling") {
    auto r = capacity_scaling(g, bound);
    return {r.solution, scaling_jsonl(r)};
  }
  throw Error(ErrorCode::BadParameter, "unknown algorithm '" + algorithm + "'");
}

/// (alpha, mu) from --alpha/--mu or from --ell, which selects
/// alpha = (4 ell - 1) chi and mu = 2^(ell+2) / (2^ell - 1).
inline std::pair<Rational, Rational> resolve_alpha_mu(const RunOptions& o, const Graph& g) {
  Rational alpha = 0, mu = 1;
  if (o.ell) {
    if (*o.ell < 1 || *o.ell > 30) throw Error(ErrorCode::BadParameter, "--ell must lie in [1, 30]");
    const Rational pow = Rational(std::int64_t{1} << *o.ell);
    alpha = (4 * Rational(*o.ell) - 1) * eccentricity(g);
    mu = 4 * pow / (pow - 1);
  }
  if (!o.alpha.empty()) alpha = resolve_amount(o.alpha, g, o.max_edges);
  if (!o.mu.empty()) mu = parse_rational(o.mu);
  return {alpha, mu};
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::BadParameter, "cannot write " + path.string());
  f << content;
}

inline int cmd_solve(const RunOptions& o, std::ostream& out) {
  const Instance g = load(o.input);
  const Solved s = run_algorithm(o.algorithm, g, o.max_edges);
  const StepProfile profile = alg_profile(g, s.solution);
  if (!o.out_dir.empty()) {
    const std::filesystem::path dir(o.out_dir);
    write_file(dir / "ordering.json", to_json(s.solution).dump() + "\n");
    write_file(dir / "trace.jsonl", s.trace);
    write_file(dir / "profile.csv", profile_csv(profile));
  }
  out << to_json(s.solution).dump() << '\n';
  return 0;
}

inline int cmd_verify(const RunOptions& o, std::ostream& out) {
  const Instance g = load(o.input);
  const auto [alpha, mu] = resolve_alpha_mu(o, g);
  if (alpha < 0 || mu < 1) throw Error(ErrorCode::BadParameter, "need alpha >= 0 and mu >= 1");
  const Solved s = run_algorithm(o.algorithm, g, o.max_edges);
  const StepProfile profile = require_spanning_profile(g, s.solution);
  const ParetoFrontier frontier = pareto_frontier(g, o.max_edges);
  const CompetitiveReport report = verify_competitive(frontier, profile, alpha, mu);
  Json j = to_json(report);
  j["algorithm"] = o.algorithm;
  j["order"] = s.solution.order;
  j["min_mu_at_alpha"] = to_string(min_mu(frontier, profile, alpha));
  j["min_alpha_at_mu"] = to_string(min_alpha(frontier, profile, mu));
  if (!o.out_dir.empty()) {
    const std::filesystem::path dir(o.out_dir);
    write_file(dir / "report.json", j.dump(2) + "\n");
    write_file(dir / "comparison.csv", comparison_csv(frontier, profile, alpha));
  }
  out << j.dump() << '\n';
  return report.holds ? 0 : 1;
}

inline int cmd_frontier(const RunOptions& o, std::ostream& out) {
  const Instance g = load(o.input);
  const std::string csv = frontier_csv(pareto_frontier(g, o.max_edges));
  if (o.out_dir.empty()) out << csv;
  else write_file(std::filesystem::path(o.out_dir) / "frontier.csv", csv);
  return 0;
}

inline int cmd_generate(const RunOptions& o, std::ostream& out) {
  const std::string text = serialize_instance(load(o.input));
  if (o.out_dir.empty()) out << text;
  else write_file(std::filesystem::path(o.out_dir) / "instance.txt", text);
  return 0;
}

struct SweepOptions {
  RunOptions run;
  std::uint64_t seed_from = 1;
  std::uint64_t seed_to = 10;
  std::vector<std::string> algorithms;
  std::vector<std::string> alphas;
  std::vector<std::string> mus;
  unsigned jobs = 1;
};

/// Every seed x algorithm x (alpha, mu) pair; prints one CSV row per case:
/// seed,algorithm,alpha,mu,verdict. Exit 0 iff every case holds.
inline int cmd_sweep(const SweepOptions& o, std::ostream& out) {
  if (o.seed_to < o.seed_from) throw Error(ErrorCode::BadParameter, "empty seed range");
  if (o.alphas.size() != o.mus.size())
    throw Error(ErrorCode::BadParameter, "--alpha and --mu must be given the same number of times");
  const std::vector<std::string> algorithms =
      o.algorithms.empty() ? std::vector<std::string>{o.run.algorithm} : o.algorithms;
  struct Case {
    std::uint64_t seed;
    std::string algorithm;
    std::size_t grid;
  };
  std::vector<Case> cases;
  for (std::uint64_t s = o.seed_from; s <= o.seed_to; ++s)
    for (const auto& a : algorithms)
      for (std::size_t i = 0; i < o.alphas.size(); ++i) cases.push_back({s, a, i});
  std::vector<std::string> rows(cases.size());
  std::vector<bool> ok(cases.size(), false);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::optional<Error> first_error;
  auto worker = [&] {
    for (std::size_t c = next++; c < cases.size(); c = next++) {
      try {
        RunOptions run = o.run;
        run.input.spec.seed = cases[c].seed;
        run.algorithm = cases[c].algorithm;
        run.alpha = o.alphas[cases[c].grid];
        run.mu = o.mus[cases[c].grid];
        run.ell.reset();
        const Instance g = load(run.input);
        const auto [alpha, mu] = resolve_alpha_mu(run, g);
        const Solved s = run_algorithm(run.algorithm, g, run.max_edges);
        const auto report = verify_competitive(pareto_frontier(g, run.max_edges),
                                               require_spanning_profile(g, s.solution), alpha, mu);
        ok[c] = report.holds;
        rows[c] = std::to_string(cases[c].seed) + "," + cases[c].algorithm + "," + to_string(alpha) + "," +
                  to_string(mu) + "," + (report.holds ? "holds" : "violated");
      } catch (const Error& e) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = e;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < std::max(1u, o.jobs); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (first_error) throw *first_error;
  std::string table;
  for (const auto& r : rows) table += r + "\n";
  if (!o.run.out_dir.empty()) write_file(std::filesystem::path(o.run.out_dir) / "sweep.csv", table);
  out << table;
  std::size_t passed = 0;
  for (bool b : ok) passed += b;
  out << "# " << passed << "/" << cases.size() << " hold\n";
  return passed == cases.size() ? 0 : 1;
}

inline void add_run_options(CLI::App& cmd, RunOptions& o, bool algorithm, bool competitive) {
  add_input_options(cmd, o.input);
  cmd.add_option("--max-edges", o.max_edges, "Enumeration bound on |E|");
  cmd.add_option("--out", o.out_dir, "Output directory");
  if (algorithm)
    cmd.add_option("--algorithm", o.algorithm, "tree-greedy | graph-greedy | capacity-scaling")
        ->check(CLI::IsMember({"tree-greedy", "graph-greedy", "capacity-scaling"}));
  if (competitive) {
    cmd.add_option("--alpha", o.alpha, "Budget slack: p/q, or a multiple of chi or gamma (e.g. 3chi)");
    cmd.add_option("--mu", o.mu, "Prize factor p/q");
    cmd.add_option("--ell", o.ell, "Use alpha=(4 ell-1) chi, mu=2^(ell+2)/(2^ell-1)");
  }
}

/// Runs the command line; returns the process exit status. Errors are
/// reported on `err` as {"error": code, "message": text}.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Incremental prize-collecting Steiner tree solver and verifier"};
  app.require_subcommand(1);
  RunOptions solve, verify, frontier, gen;
  SweepOptions sweep;
  add_run_options(*app.add_subcommand("solve", "Compute an incremental ordering"), solve, true, false);
  add_run_options(*app.add_subcommand("verify", "Check (alpha, mu)-competitiveness"), verify, true, true);
  add_run_options(*app.add_subcommand("frontier", "Exact OPT frontier as CSV"), frontier, false, false);
  add_run_options(*app.add_subcommand("generate", "Emit a generated instance"), gen, false, false);
  CLI::App* sw = app.add_subcommand("sweep", "Seed range x algorithms x (alpha, mu) grid");
  add_input_options(*sw, sweep.run.input);
  sw->add_option("--max-edges", sweep.run.max_edges, "Enumeration bound on |E|");
  sw->add_option("--out", sweep.run.out_dir, "Output directory");
  sw->add_option("--seed-from", sweep.seed_from, "First seed");
  sw->add_option("--seed-to", sweep.seed_to, "Last seed");
  sw->add_option("--algorithm", sweep.algorithms, "Algorithms (repeatable)")
      ->check(CLI::IsMember({"tree-greedy", "graph-greedy", "capacity-scaling"}));
  sw->add_option("--alpha", sweep.alphas, "alpha values (repeatable, paired with --mu)")->required();
  sw->add_option("--mu", sweep.mus, "mu values (repeatable)")->required();
  sw->add_option("--jobs", sweep.jobs, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << Json{{"error", "ParseError"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }
  try {
    if (app.got_subcommand("solve")) return cmd_solve(solve, out);
    if (app.got_subcommand("verify")) return cmd_verify(verify, out);
    if (app.got_subcommand("frontier")) return cmd_frontier(frontier, out);
    if (app.got_subcommand("generate")) return cmd_generate(gen, out);
    return cmd_sweep(sweep, out);
  } catch (const Error& e) {
    err << Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << Json{{"error", "Internal"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }
}

}  // namespace ipcst::cli
