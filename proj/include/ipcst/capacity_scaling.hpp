#pragma once

#include <algorithm>
#include <vector>

#include "ipcst/enumeration.hpp"
#include "ipcst/metrics.hpp"
#include "ipcst/tree_greedy.hpp"

namespace ipcst {

struct FrontierPoint {
  Rational cost{0};
  Rational prize{0};
  friend bool operator==(const FrontierPoint&, const FrontierPoint&) = default;
};

/// Nondominated (cost, prize) pairs of all rooted subtrees, strictly
/// increasing in both coordinates and starting at (0, 0).
struct ParetoFrontier {
  std::vector<FrontierPoint> points;

  /// p(OPT(B)).
  Rational opt(const Rational& budget) const {
    Rational best = 0;
    for (const auto& pt : points) {
      if (pt.cost > budget) break;
      best = pt.prize;
    }
    return best;
  }
};

inline ParetoFrontier frontier_from_records(std::vector<SubtreeRecord> records) {
  std::sort(records.begin(), records.end(), [](const SubtreeRecord& a, const SubtreeRecord& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    return a.prize > b.prize;
  });
  ParetoFrontier f;
  for (const auto& r : records)
    if (f.points.empty() || r.prize > f.points.back().prize) f.points.push_back({r.cost, r.prize});
  return f;
}

inline ParetoFrontier pareto_frontier(const Graph& g, std::size_t bound = kDefaultEnumerationBound) {
  return frontier_from_records(rooted_subtree_records(g, bound));
}

namespace detail {

inline RootedSubtree best_within_budget(const Graph& g, const std::vector<SubtreeRecord>& records,
                                        const Rational& budget) {
  const SubtreeRecord* best = nullptr;
  std::vector<EdgeId> best_edges;
  for (const auto& r : records) {
    if (r.cost > budget) continue;
    if (best) {
      if (r.prize < best->prize) continue;
      if (r.prize == best->prize) {
        if (r.cost > best->cost) continue;
        if (r.cost == best->cost && !(mask_to_edges(g, r.mask) < best_edges)) continue;
      }
    }
    best = &r;
    best_edges = mask_to_edges(g, r.mask);
  }
  return RootedSubtree::from_edges(g, std::move(best_edges));
}

}  // namespace detail

/// A rooted subtree of maximum prize with cost at most `budget`; ties go to
/// lower cost, then to the lexicographically smaller edge-id list.
inline RootedSubtree optimal_budget_subtree(const Graph& g, const Rational& budget,
                                            std::size_t bound = kDefaultEnumerationBound) {
  return detail::best_within_budget(g, rooted_subtree_records(g, bound), budget);
}

struct ScalingPhase {
  std::size_t iteration = 0;
  Rational budget{0};
  std::vector<EdgeId> tree;       // T_i, sorted
  Rational tree_prize{0};
  Rational tree_cost{0};
  std::vector<EdgeId> appended;   // edges that survived the skip rule, in order
};

struct ScalingResult {
  IncrementalSolution solution;
  Rational chi{0};
  std::vector<ScalingPhase> phases;
};

/// Capacity scaling: optimal subtrees for budgets chi, 2 chi, 4 chi, ...,
/// each ordered by the tree greedy and appended, skipping edges whose
/// endpoints are both already connected.
inline ScalingResult capacity_scaling(const Graph& g, std::size_t bound = kDefaultEnumerationBound) {
  check_enumeration_bound(g, bound);
  ScalingResult result;
  result.chi = eccentricity(g);
  const auto prize_vertices = g.prize_vertices();
  if (result.chi == 0 || prize_vertices.empty()) return result;

  const auto records = rooted_subtree_records(g, bound);
  std::vector<bool> in_tree(g.vertex_count(), false);
  in_tree[g.root()] = true;
  auto spans = [&] {
    return std::all_of(prize_vertices.begin(), prize_vertices.end(), [&](VertexId v) { return in_tree[v]; });
  };
  Rational budget = result.chi;
  for (std::size_t i = 0; !spans(); ++i, budget *= 2) {
    const RootedSubtree t = detail::best_within_budget(g, records, budget);
    ScalingPhase phase;
    phase.iteration = i;
    phase.budget = budget;
    phase.tree.assign(t.edges().begin(), t.edges().end());
    phase.tree_prize = t.prize();
    phase.tree_cost = t.cost();
    const GreedyResult inner = density_greedy_tree(g.restricted_to(t.edges()));
    for (EdgeId id : inner.solution.order) {
      const Edge& e = g.edge(id);
      if (in_tree[e.u] && in_tree[e.v]) continue;
      in_tree[e.u] = in_tree[e.v] = true;
      phase.appended.push_back(id);
      result.solution.order.push_back(id);
    }
    result.phases.push_back(std::move(phase));
  }
  return result;
}

}  // namespace ipcst
