#pragma once

#include <cstdint>
#include <vector>

#include "ipcst/graph.hpp"
#include "ipcst/metrics.hpp"

namespace ipcst {

/// Bit i of an EdgeMask stands for the edge at position i of the graph.
using EdgeMask = std::uint64_t;

inline void check_enumeration_bound(const Graph& g, std::size_t bound) {
  if (g.edge_count() > bound || g.edge_count() > 64)
    throw Error(ErrorCode::InstanceTooLarge,
                std::to_string(g.edge_count()) + " edges exceeds bound " + std::to_string(bound));
}

inline std::vector<EdgeId> mask_to_edges(const Graph& g, EdgeMask mask) {
  std::vector<EdgeId> out;
  for (std::size_t pos = 0; mask != 0; ++pos, mask >>= 1)
    if (mask & 1) out.push_back(g.edge_at(pos).id);
  std::sort(out.begin(), out.end());
  return out;
}

inline EdgeMask edges_to_mask(const Graph& g, std::span<const EdgeId> edges) {
  EdgeMask mask = 0;
  for (EdgeId id : edges) mask |= EdgeMask{1} << g.position_of(id);
  return mask;
}

namespace detail {

template <class Visitor>
class SubtreeWalker {
 public:
  SubtreeWalker(const Graph& g, Visitor& visit) : g_(g), visit_(visit), in_tree_(g.vertex_count(), false) {}

  void run() {
    in_tree_[g_.root()] = true;
    visit_(EdgeMask{0}, cost_, prize_);
    std::vector<std::size_t> frontier;
    push_incident(g_.root(), frontier, static_cast<std::size_t>(-1));
    expand(std::move(frontier));
  }

 private:
  void push_incident(VertexId v, std::vector<std::size_t>& frontier, std::size_t skip) const {
    const auto& inc = g_.incident(v);
    for (auto it = inc.rbegin(); it != inc.rend(); ++it) {
      const std::size_t pos = *it;
      if (pos == skip || (excluded_ >> pos & 1)) continue;
      const Edge& e = g_.edge_at(pos);
      if (in_tree_[e.u] && in_tree_[e.v]) continue;
      frontier.push_back(pos);
    }
  }

  // Pops frontier edges one at a time; each is either taken (recursing with
  // the grown frontier) or excluded for the rest of this branch.
  void expand(std::vector<std::size_t> frontier) {
    const EdgeMask saved_excluded = excluded_;
    while (!frontier.empty()) {
      const std::size_t pos = frontier.back();
      frontier.pop_back();
      if (excluded_ >> pos & 1) continue;
      const Edge& e = g_.edge_at(pos);
      if (in_tree_[e.u] == in_tree_[e.v]) continue;
      const VertexId w = in_tree_[e.u] ? e.v : e.u;
      const EdgeMask bit = EdgeMask{1} << pos;

      in_tree_[w] = true;
      mask_ |= bit;
      cost_ += e.cost;
      prize_ += g_.prize(w);
      visit_(mask_, cost_, prize_);
      std::vector<std::size_t> grown = frontier;
      push_incident(w, grown, pos);
      expand(std::move(grown));
      prize_ -= g_.prize(w);
      cost_ -= e.cost;
      mask_ &= ~bit;
      in_tree_[w] = false;

      excluded_ |= bit;
    }
    excluded_ = saved_excluded;
  }

  const Graph& g_;
  Visitor& visit_;
  std::vector<bool> in_tree_;
  EdgeMask mask_ = 0;
  EdgeMask excluded_ = 0;
  Rational cost_{0};
  Rational prize_{0};
};

}  // namespace detail

/// Calls visit(mask, cost, prize) once for every rooted subtree of g,
/// including the empty one.
template <class Visitor>
void for_each_rooted_subtree(const Graph& g, Visitor&& visit, std::size_t bound = kDefaultEnumerationBound) {
  check_enumeration_bound(g, bound);
  detail::SubtreeWalker<std::remove_reference_t<Visitor>> walker(g, visit);
  walker.run();
}

struct SubtreeRecord {
  EdgeMask mask = 0;
  Rational cost{0};
  Rational prize{0};
};

inline std::vector<SubtreeRecord> rooted_subtree_records(const Graph& g,
                                                         std::size_t bound = kDefaultEnumerationBound) {
  std::vector<SubtreeRecord> out;
  for_each_rooted_subtree(
      g, [&](EdgeMask m, const Rational& c, const Rational& p) { out.push_back({m, c, p}); }, bound);
  return out;
}

inline std::vector<RootedSubtree> enumerate_rooted_subtrees(const Graph& g,
                                                            std::size_t bound = kDefaultEnumerationBound) {
  std::vector<RootedSubtree> out;
  for_each_rooted_subtree(
      g, [&](EdgeMask m, const Rational&, const Rational&) {
        out.push_back(RootedSubtree::from_edges(g, mask_to_edges(g, m)));
      },
      bound);
  return out;
}

}  // namespace ipcst
