#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "ipcst/contraction.hpp"
#include "ipcst/graph.hpp"
#include "ipcst/metrics.hpp"

namespace ipcst {

/// An edge ordering whose every prefix is a rooted subtree.
struct IncrementalSolution {
  std::vector<EdgeId> order;
  friend bool operator==(const IncrementalSolution&, const IncrementalSolution&) = default;
};

/// One appended edge together with the min-max subtree fixed for it.
struct GreedyStep {
  std::size_t iteration = 0;
  EdgeId edge = 0;
  Rational density{0};             // density of the fixed min-max subtree in the contracted graph
  std::vector<EdgeId> extension;   // edge ids of that subtree, sorted
  VertexId anchor = 0;             // vertex of the already-built tree the edge attaches to
};

/// A maximal run of edges belonging to one fixed extension T_i.
struct GreedyBlock {
  std::vector<EdgeId> edges;       // in append order
  Rational gain{0};                // prize collected beyond the anchor
  Rational cost{0};
  VertexId anchor = 0;

  Rational density() const { return cost == 0 ? Rational(0) : gain / cost; }
};

struct GreedyTrace {
  std::vector<GreedyStep> steps;
  std::vector<GreedyBlock> blocks;
};

struct GreedyResult {
  IncrementalSolution solution;
  GreedyTrace trace;
};

struct DensestSubtree {
  RootedSubtree tree;
  Rational density{0};
};

namespace detail {

// Bottom-up values of max_T p(T) - d c(T) over subtrees hanging below each
// vertex, on the tree component of the root.
class TreeDensityDp {
 public:
  explicit TreeDensityDp(const Graph& g) : g_(&g), view_(g, root_component_edges(g), g.root()) {}

  void evaluate(const Rational& d) {
    value_.assign(g_->vertex_count(), Rational(0));
    const auto order = view_.order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const VertexId v = *it;
      if (v == view_.root()) continue;
      Rational val = g_->prize(v) - d * g_->edge(*view_.parent_edge(v)).cost;
      for (VertexId c : view_.children(v))
        if (value_[c] > 0) val += value_[c];
      value_[v] = std::move(val);
    }
  }

  // The branch below `v` (including its parent edge) with strict inclusion.
  void collect(VertexId v, std::vector<EdgeId>& out) const {
    out.push_back(*view_.parent_edge(v));
    for (VertexId c : view_.children(v))
      if (value_[c] > 0) collect(c, out);
  }

  std::vector<EdgeId> positive_part() const {
    std::vector<EdgeId> out;
    for (VertexId c : view_.children(view_.root()))
      if (value_[c] > 0) collect(c, out);
    return out;
  }

  const RootedTreeView& view() const noexcept { return view_; }
  const Rational& value(VertexId v) const { return value_[v]; }

 private:
  static std::vector<EdgeId> root_component_edges(const Graph& g) {
    UnionFind uf(g.vertex_count());
    for (const Edge& e : g.edges())
      if (!uf.unite(e.u, e.v)) throw Error(ErrorCode::NotATree, "graph contains a cycle");
    const std::size_t root_set = uf.find(g.root());
    std::vector<EdgeId> out;
    for (const Edge& e : g.edges())
      if (uf.find(e.u) == root_set) out.push_back(e.id);
    return out;
  }

  const Graph* g_;
  RootedTreeView view_;
  std::vector<Rational> value_;
};

// Dinkelbach iteration; leaves the dp evaluated at the optimal density.
inline DensestSubtree dinkelbach(const Graph& g, TreeDensityDp& dp) {
  Rational d = 0;
  RootedSubtree best = RootedSubtree::empty(g);
  for (;;) {
    dp.evaluate(d);
    auto part = dp.positive_part();
    if (part.empty()) break;
    best = RootedSubtree::from_edges(g, std::move(part));
    d = best.density();
  }
  return {std::move(best), d};
}

}  // namespace detail

/// A rooted subtree of maximum density on a tree (polynomial).
inline DensestSubtree max_density_rooted_subtree(const Graph& g) {
  detail::TreeDensityDp dp(g);
  return detail::dinkelbach(g, dp);
}

/// An inclusion-wise minimal maximum-density rooted subtree of a tree. It has
/// exactly one edge at the root; ties between root branches go to the lowest
/// root edge id.
inline RootedSubtree min_max_subtree_tree(const Graph& g) {
  detail::TreeDensityDp dp(g);
  const DensestSubtree best = detail::dinkelbach(g, dp);
  if (best.density == 0) throw Error(ErrorCode::NoPrizeLeft, "no reachable prize");
  const auto& view = dp.view();
  std::optional<VertexId> pick;
  for (VertexId c : view.children(view.root())) {
    if (dp.value(c) != 0) continue;
    if (!pick || *view.parent_edge(c) < *view.parent_edge(*pick)) pick = c;
  }
  std::vector<EdgeId> edges;
  dp.collect(*pick, edges);
  return RootedSubtree::from_edges(g, std::move(edges));
}

/// Groups consecutive steps into blocks: a block opens with a step whose
/// extension has not been covered yet and spans |extension| steps.
inline std::vector<GreedyBlock> blocks_from_steps(const Graph& g, const std::vector<GreedyStep>& steps) {
  std::vector<GreedyBlock> blocks;
  std::size_t s = 0;
  while (s < steps.size()) {
    GreedyBlock b;
    b.anchor = steps[s].anchor;
    const std::size_t end = std::min(steps.size(), s + std::max<std::size_t>(1, steps[s].extension.size()));
    std::vector<VertexId> seen{b.anchor};
    for (; s < end; ++s) {
      const Edge& e = g.edge(steps[s].edge);
      b.edges.push_back(e.id);
      b.cost += e.cost;
      for (VertexId v : {e.u, e.v}) {
        if (std::find(seen.begin(), seen.end(), v) == seen.end()) {
          seen.push_back(v);
          b.gain += g.prize(v);
        }
      }
    }
    blocks.push_back(std::move(b));
  }
  return blocks;
}

/// The density-greedy algorithm on a tree.
inline GreedyResult density_greedy_tree(const Graph& g) {
  detail::TreeDensityDp check(g);  // rejects non-trees up front
  GreedyResult result;
  std::vector<EdgeId> built;
  std::vector<bool> in_built(g.vertex_count(), false);
  in_built[g.root()] = true;
  for (std::size_t iter = 0;; ++iter) {
    const ContractedGraph cg = contract(g, built);
    if (cg.graph.total_prize() == 0) break;
    RootedSubtree fixed = [&] {
      try {
        return min_max_subtree_tree(cg.graph);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::NoPrizeLeft)
          throw Error(ErrorCode::UnreachablePrizeVertex, "prize left that the root cannot reach");
        throw;
      }
    }();
    const VertexId croot = cg.graph.root();
    EdgeId chosen = 0;
    for (EdgeId id : fixed.edges()) {
      const Edge& e = cg.graph.edge(id);
      if (e.u == croot || e.v == croot) chosen = id;
    }
    const Edge& original = g.edge(chosen);
    GreedyStep step;
    step.iteration = iter;
    step.edge = chosen;
    step.density = fixed.density();
    step.extension.assign(fixed.edges().begin(), fixed.edges().end());
    step.anchor = in_built[original.u] ? original.u : original.v;
    in_built[original.u] = in_built[original.v] = true;
    result.trace.steps.push_back(std::move(step));
    result.solution.order.push_back(chosen);
    built.push_back(chosen);
  }
  result.trace.blocks = blocks_from_steps(g, result.trace.steps);
  return result;
}

}  // namespace ipcst
