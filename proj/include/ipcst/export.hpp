#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "ipcst/capacity_scaling.hpp"
#include "ipcst/oracle_eval.hpp"
#include "ipcst/tree_greedy.hpp"

namespace ipcst {

// All numbers on the wire are exact: rationals are "num/den" strings in JSON
// and num,den column pairs in CSV. CSV files have no header row.

using Json = nlohmann::ordered_json;

inline Json to_json(const IncrementalSolution& pi) { return Json{{"order", pi.order}}; }

inline Json labels_json(const Graph& g, std::span<const VertexId> vs) {
  Json out = Json::array();
  for (VertexId v : vs) out.push_back(g.label(v));
  return out;
}

inline std::string trace_jsonl(const Graph& g, const GreedyTrace& trace) {
  std::ostringstream out;
  for (const auto& s : trace.steps)
    out << Json{{"iter", s.iteration},
                {"edge", s.edge},
                {"density", to_string(s.density)},
                {"extension", s.extension},
                {"anchor", g.label(s.anchor)}}
               .dump()
        << '\n';
  Json blocks = Json::array();
  for (const auto& b : trace.blocks)
    blocks.push_back(Json{{"edges", b.edges},
                          {"density", to_string(b.density())},
                          {"prize", to_string(b.gain)},
                          {"cost", to_string(b.cost)},
                          {"anchor", g.label(b.anchor)}});
  out << Json{{"blocks", blocks}}.dump() << '\n';
  return out.str();
}

inline std::string scaling_jsonl(const ScalingResult& run) {
  std::ostringstream out;
  for (const auto& p : run.phases)
    out << Json{{"iter", p.iteration},
                {"budget", to_string(p.budget)},
                {"tree", p.tree},
                {"tree_prize", to_string(p.tree_prize)},
                {"tree_cost", to_string(p.tree_cost)},
                {"appended", p.appended}}
               .dump()
        << '\n';
  return out.str();
}

inline std::string profile_csv(const StepProfile& profile) {
  std::ostringstream out;
  for (const auto& bp : profile.breakpoints)
    out << numerator_string(bp.budget) << ',' << denominator_string(bp.budget) << ','
        << numerator_string(bp.prize) << ',' << denominator_string(bp.prize) << '\n';
  return out.str();
}

inline std::string frontier_csv(const ParetoFrontier& frontier) {
  std::ostringstream out;
  for (const auto& pt : frontier.points)
    out << numerator_string(pt.cost) << ',' << denominator_string(pt.cost) << ','
        << numerator_string(pt.prize) << ',' << denominator_string(pt.prize) << '\n';
  return out.str();
}

/// One row per frontier budget B: B as num,den then p(OPT(B)) and p(ALG(B + alpha)).
inline std::string comparison_csv(const ParetoFrontier& frontier, const StepProfile& profile,
                                  const Rational& alpha) {
  std::ostringstream out;
  for (const auto& pt : frontier.points)
    out << numerator_string(pt.cost) << ',' << denominator_string(pt.cost) << ',' << to_string(pt.prize) << ','
        << to_string(profile.value_at(pt.cost + alpha)) << '\n';
  return out.str();
}

inline Json to_json(const CompetitiveReport& r) {
  Json j{{"alpha", to_string(r.alpha)},
         {"mu", to_string(r.mu)},
         {"verdict", r.holds ? "holds" : "violated"},
         {"budgets_checked", r.budgets_checked}};
  if (r.witness)
    j["witness"] = Json{{"budget", to_string(r.witness->budget)},
                        {"opt_prize", to_string(r.witness->opt)},
                        {"alg_prize", to_string(r.witness->alg)}};
  return j;
}

}  // namespace ipcst
