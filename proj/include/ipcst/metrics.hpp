#pragma once

#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <vector>

#include "ipcst/graph.hpp"

namespace ipcst {

/// Default ceiling on |E| for every exhaustive routine in the library.
inline constexpr std::size_t kDefaultEnumerationBound = 20;

/// Shortest-path cost l(v) from the root; nullopt when v is unreachable.
inline std::vector<std::optional<Rational>> root_distances(const Graph& g) {
  std::vector<std::optional<Rational>> dist(g.vertex_count());
  using Item = std::pair<Rational, VertexId>;
  auto later = [](const Item& a, const Item& b) { return a.first > b.first; };
  std::priority_queue<Item, std::vector<Item>, decltype(later)> queue(later);
  dist[g.root()] = Rational(0);
  queue.emplace(Rational(0), g.root());
  std::vector<bool> done(g.vertex_count(), false);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (done[v]) continue;
    done[v] = true;
    for (std::size_t pos : g.incident(v)) {
      const Edge& e = g.edge_at(pos);
      const VertexId w = e.other(v);
      Rational nd = d + e.cost;
      if (!dist[w] || nd < *dist[w]) {
        dist[w] = nd;
        queue.emplace(std::move(nd), w);
      }
    }
  }
  return dist;
}

/// chi: the largest shortest-path cost from the root to a reachable vertex.
inline Rational eccentricity(const Graph& g) {
  Rational chi = 0;
  for (const auto& d : root_distances(g))
    if (d && *d > chi) chi = *d;
  return chi;
}

/// gamma: the largest cost of a simple path starting at the root.
/// Exhaustive; refuses graphs with more than `bound` edges.
inline Rational longest_root_path(const Graph& g, std::size_t bound = kDefaultEnumerationBound) {
  if (g.edge_count() > bound)
    throw Error(ErrorCode::InstanceTooLarge,
                std::to_string(g.edge_count()) + " edges exceeds bound " + std::to_string(bound));
  std::vector<bool> on_path(g.vertex_count(), false);
  Rational best = 0;
  std::function<void(VertexId, const Rational&)> walk = [&](VertexId v, const Rational& len) {
    if (len > best) best = len;
    on_path[v] = true;
    for (std::size_t pos : g.incident(v)) {
      const Edge& e = g.edge_at(pos);
      const VertexId w = e.other(v);
      if (!on_path[w]) walk(w, len + e.cost);
    }
    on_path[v] = false;
  };
  walk(g.root(), Rational(0));
  return best;
}

namespace detail {

// Checks that `edges` form a single tree (connected, acyclic).
inline bool is_tree(const Graph& g, std::span<const EdgeId> edges) {
  if (edges.empty()) return true;
  UnionFind uf(g.vertex_count());
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    if (!uf.unite(e.u, e.v)) return false;
  }
  const std::size_t rep = uf.find(g.edge(edges.front()).u);
  for (EdgeId id : edges)
    if (uf.find(g.edge(id).u) != rep) return false;
  return true;
}

inline VertexId unique_closest(const Subgraph& s, const std::vector<std::optional<Rational>>& dist,
                               const Graph& g) {
  std::optional<VertexId> best;
  bool tied = false;
  for (VertexId v : s.vertices) {
    if (!dist[v])
      throw Error(ErrorCode::BadParameter, "vertex " + std::to_string(g.label(v)) + " unreachable");
    if (!best || *dist[v] < *dist[*best]) {
      best = v;
      tied = false;
    } else if (*dist[v] == *dist[*best]) {
      tied = true;
    }
  }
  if (tied) throw Error(ErrorCode::AmbiguousAnchor, "closest vertex to the root is not unique");
  return *best;
}

inline Rational density_with(const Graph& g, std::span<const EdgeId> edges,
                             const std::vector<std::optional<Rational>>& dist) {
  if (edges.empty()) return 0;
  if (!is_tree(g, edges)) throw Error(ErrorCode::NotATree, "density needs a connected acyclic edge set");
  const Subgraph s = edge_induced(g, {edges.begin(), edges.end()});
  const VertexId anchor = unique_closest(s, dist, g);
  return (prize_of(g, s.vertices) - g.prize(anchor)) / cost_of(g, s.edges);
}

}  // namespace detail

/// d_G(T) = (p(T) - p(r_T)) / c(T), where r_T is the vertex of T closest to
/// the root in g. Zero for an empty edge set. Throws AmbiguousAnchor when the
/// closest vertex is not unique.
inline Rational density(const Graph& g, std::span<const EdgeId> edges) {
  if (edges.empty()) return 0;
  return detail::density_with(g, edges, root_distances(g));
}

/// d_{T'}(T): density with the anchor measured inside the rooted base tree T'.
inline Rational density_over(const Graph& g, const RootedSubtree& base, std::span<const EdgeId> edges) {
  for (EdgeId id : edges)
    if (!base.contains_edge(id))
      throw Error(ErrorCode::NotInTree, "edge " + std::to_string(id) + " is not in the base tree");
  const Graph tree = g.restricted_to(base.edges());
  return detail::density_with(tree, edges, root_distances(tree));
}

/// Vertex of each component closest to the root; requires an acyclic edge set.
inline Forest make_forest(const Graph& g, std::vector<EdgeId> edges,
                          std::span<const VertexId> extra_vertices = {}) {
  UnionFind uf(g.vertex_count());
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    if (!uf.unite(e.u, e.v)) throw Error(ErrorCode::NotATree, "forest edges contain a cycle");
  }
  Forest f;
  Subgraph s = edge_induced(g, std::move(edges), extra_vertices);
  const auto dist = root_distances(g);
  std::vector<std::vector<VertexId>> groups;
  std::vector<std::size_t> group_of(g.vertex_count(), static_cast<std::size_t>(-1));
  for (VertexId v : s.vertices) {
    const std::size_t rep = uf.find(v);
    if (group_of[rep] == static_cast<std::size_t>(-1)) {
      group_of[rep] = groups.size();
      groups.emplace_back();
    }
    groups[group_of[rep]].push_back(v);
  }
  for (const auto& members : groups)
    f.anchors.push_back(detail::unique_closest(Subgraph{{}, members}, dist, g));
  f.components = groups.size();
  f.cost = cost_of(g, s.edges);
  f.prize = prize_of(g, s.vertices);
  f.edges = std::move(s.edges);
  f.vertices = std::move(s.vertices);
  return f;
}

/// Parent structure of a tree (given by edge ids) hung from `tree_root`.
class RootedTreeView {
 public:
  RootedTreeView(const Graph& g, std::span<const EdgeId> tree_edges, VertexId tree_root)
      : g_(&g), root_(tree_root), parent_edge_(g.vertex_count()), in_tree_(g.vertex_count(), false),
        children_(g.vertex_count()) {
    if (!detail::is_tree(g, tree_edges)) throw Error(ErrorCode::NotATree, "edges do not form a tree");
    std::vector<std::vector<std::size_t>> adj(g.vertex_count());
    for (EdgeId id : tree_edges) {
      const std::size_t pos = g.position_of(id);
      const Edge& e = g.edge_at(pos);
      adj[e.u].push_back(pos);
      adj[e.v].push_back(pos);
    }
    if (!tree_edges.empty() && adj[tree_root].empty())
      throw Error(ErrorCode::NotInTree, "tree root is not a vertex of the tree");
    in_tree_[tree_root] = true;
    order_.push_back(tree_root);
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const VertexId v = order_[i];
      for (std::size_t pos : adj[v]) {
        const VertexId w = g.edge_at(pos).other(v);
        if (in_tree_[w]) continue;
        in_tree_[w] = true;
        parent_edge_[w] = g.edge_at(pos).id;
        children_[v].push_back(w);
        order_.push_back(w);
      }
    }
  }

  VertexId root() const noexcept { return root_; }
  bool contains(VertexId v) const { return v < in_tree_.size() && in_tree_[v]; }
  /// Vertices in breadth-first order from the root.
  std::span<const VertexId> order() const noexcept { return order_; }
  std::span<const VertexId> children(VertexId v) const { return children_.at(v); }
  std::optional<EdgeId> parent_edge(VertexId v) const { return parent_edge_.at(v); }

  /// T_v: v and everything behind it.
  Subgraph branch_at_vertex(VertexId v) const {
    if (!contains(v)) throw Error(ErrorCode::NotInTree, "vertex not in tree");
    std::vector<EdgeId> edges;
    std::vector<VertexId> stack{v};
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (VertexId c : children_[x]) {
        edges.push_back(*parent_edge_[c]);
        stack.push_back(c);
      }
    }
    return edge_induced(*g_, std::move(edges), std::span<const VertexId>(&v, 1));
  }

  /// T_e: both endpoints of e and everything behind e.
  Subgraph branch_at_edge(EdgeId e) const {
    const Edge& edge = g_->edge(e);
    VertexId child;
    if (contains(edge.v) && parent_edge_[edge.v] == e) child = edge.v;
    else if (contains(edge.u) && parent_edge_[edge.u] == e) child = edge.u;
    else throw Error(ErrorCode::NotInTree, "edge " + std::to_string(e) + " not in tree");
    Subgraph below = branch_at_vertex(child);
    below.edges.insert(std::upper_bound(below.edges.begin(), below.edges.end(), e), e);
    const VertexId up = edge.other(child);
    below.vertices.insert(std::upper_bound(below.vertices.begin(), below.vertices.end(), up), up);
    return below;
  }

 private:
  const Graph* g_;
  VertexId root_;
  std::vector<std::optional<EdgeId>> parent_edge_;
  std::vector<bool> in_tree_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<VertexId> order_;
};

}  // namespace ipcst
