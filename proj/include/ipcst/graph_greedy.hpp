#pragma once

#include <vector>

#include "ipcst/contraction.hpp"
#include "ipcst/enumeration.hpp"
#include "ipcst/tree_greedy.hpp"

namespace ipcst {

/// Exhaustive min-max subtree: maximum density, then fewest edges, then the
/// lexicographically smallest sorted edge-id list.
inline RootedSubtree min_max_subtree_exact(const Graph& g, std::size_t bound = kDefaultEnumerationBound) {
  std::optional<SubtreeRecord> best;
  std::vector<EdgeId> best_edges;
  std::size_t best_size = 0;
  for_each_rooted_subtree(
      g,
      [&](EdgeMask m, const Rational& c, const Rational& p) {
        if (m == 0 || p == 0) return;
        const std::size_t size = static_cast<std::size_t>(std::popcount(m));
        if (best) {
          const Rational lhs = p * best->cost;
          const Rational rhs = best->prize * c;
          if (lhs < rhs) return;
          if (lhs == rhs) {
            if (size > best_size) return;
            if (size == best_size) {
              auto edges = mask_to_edges(g, m);
              if (!(edges < best_edges)) return;
            }
          }
        }
        best = SubtreeRecord{m, c, p};
        best_size = size;
        best_edges = mask_to_edges(g, m);
      },
      bound);
  if (!best) throw Error(ErrorCode::NoPrizeLeft, "no rooted subtree collects prize");
  return RootedSubtree::from_edges(g, std::move(best_edges));
}

/// The density-greedy algorithm on general graphs, with an exhaustive
/// min-max oracle. Blocks are the extensions fixed in each iteration.
inline GreedyResult density_greedy_graph(const Graph& g, std::size_t bound = kDefaultEnumerationBound) {
  check_enumeration_bound(g, bound);
  GreedyResult result;
  std::vector<EdgeId> built;
  std::vector<bool> in_built(g.vertex_count(), false);
  in_built[g.root()] = true;
  for (std::size_t iter = 0;; ++iter) {
    const ContractedGraph cg = contract(g, built);
    if (cg.graph.total_prize() == 0) break;
    const RootedSubtree fixed = min_max_subtree_exact(cg.graph, bound);
    const Graph on_fixed = cg.graph.restricted_to(fixed.edges());
    const GreedyResult inner = density_greedy_tree(on_fixed);

    GreedyBlock block;
    block.gain = fixed.prize();
    block.cost = fixed.cost();
    for (EdgeId id : inner.solution.order) {
      const Edge& e = g.edge(id);
      if (block.edges.empty()) block.anchor = in_built[e.u] ? e.u : e.v;
      GreedyStep step;
      step.iteration = iter;
      step.edge = id;
      step.density = fixed.density();
      step.extension.assign(fixed.edges().begin(), fixed.edges().end());
      step.anchor = in_built[e.u] ? e.u : e.v;
      in_built[e.u] = in_built[e.v] = true;
      result.trace.steps.push_back(std::move(step));
      result.solution.order.push_back(id);
      block.edges.push_back(id);
      built.push_back(id);
    }
    result.trace.blocks.push_back(std::move(block));
  }
  return result;
}

/// Reorders blocks until their densities are nonincreasing: a denser block
/// rooted at the same vertex as its predecessor is switched ahead of it,
/// otherwise the two are merged.
inline std::vector<GreedyBlock> postprocess_blocks(std::vector<GreedyBlock> blocks) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
      if (!(blocks[i + 1].density() > blocks[i].density())) continue;
      changed = true;
      if (blocks[i + 1].anchor == blocks[i].anchor) {
        std::swap(blocks[i], blocks[i + 1]);
      } else {
        GreedyBlock& a = blocks[i];
        GreedyBlock& b = blocks[i + 1];
        a.edges.insert(a.edges.end(), b.edges.begin(), b.edges.end());
        a.gain += b.gain;
        a.cost += b.cost;
        blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      }
    }
  }
  return blocks;
}

/// Orders the edges of each post-processed block by running the tree greedy
/// on the block with all preceding blocks contracted.
inline IncrementalSolution postprocess_density_order(const Graph& g, const GreedyTrace& trace) {
  const auto blocks = postprocess_blocks(trace.blocks);
  IncrementalSolution out;
  for (const GreedyBlock& b : blocks) {
    const ContractedGraph cg = contract(g, out.order);
    const GreedyResult inner = density_greedy_tree(cg.graph.restricted_to(b.edges));
    std::vector<EdgeId> order = inner.solution.order;
    for (EdgeId id : b.edges)
      if (std::find(order.begin(), order.end(), id) == order.end()) order.push_back(id);
    out.order.insert(out.order.end(), order.begin(), order.end());
  }
  return out;
}

}  // namespace ipcst
