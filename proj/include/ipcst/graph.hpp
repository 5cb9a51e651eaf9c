#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ipcst/error.hpp"
#include "ipcst/rational.hpp"

namespace ipcst {

/// Dense vertex index into a Graph.
using VertexId = std::size_t;
/// External vertex name as it appears in instance files.
using VertexLabel = std::int64_t;
/// Stable edge identity. An edge keeps its id through every contraction.
using EdgeId = std::int64_t;

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;
  Rational cost;

  bool is_loop() const noexcept { return u == v; }
  VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
};

// Minimal disjoint-set forest over dense vertex indices.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  /// Returns false when a and b were already joined.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

/// Undirected rooted multigraph with rational vertex prizes and edge costs.
///
/// Parallel edges and self-loops are representable so that contracted graphs
/// share this type. The root prize is always zero.
class Graph {
 public:
  Graph() : Graph({0}, {Rational(0)}, {}, 0) {}

  Graph(std::vector<VertexLabel> labels, std::vector<Rational> prizes, std::vector<Edge> edges,
        VertexId root)
      : labels_(std::move(labels)), prizes_(std::move(prizes)), edges_(std::move(edges)), root_(root) {
    if (labels_.size() != prizes_.size())
      throw Error(ErrorCode::BadParameter, "label and prize vectors differ in length");
    if (root_ >= labels_.size()) throw Error(ErrorCode::UnknownVertex, "root out of range");
    std::unordered_map<VertexLabel, VertexId> seen_labels;
    for (VertexId v = 0; v < labels_.size(); ++v) {
      if (!seen_labels.emplace(labels_[v], v).second)
        throw Error(ErrorCode::DuplicateVertexId, "vertex " + std::to_string(labels_[v]));
      if (prizes_[v] < 0)
        throw Error(ErrorCode::NegativePrize, "vertex " + std::to_string(labels_[v]));
    }
    prizes_[root_] = 0;
    incident_.resize(labels_.size());
    for (std::size_t pos = 0; pos < edges_.size(); ++pos) {
      const Edge& e = edges_[pos];
      if (e.u >= labels_.size() || e.v >= labels_.size())
        throw Error(ErrorCode::UnknownVertex, "edge " + std::to_string(e.id));
      if (e.cost <= 0) throw Error(ErrorCode::NonPositiveCost, "edge " + std::to_string(e.id));
      if (!position_.emplace(e.id, pos).second)
        throw Error(ErrorCode::DuplicateEdgeId, "edge " + std::to_string(e.id));
      incident_[e.u].push_back(pos);
      if (!e.is_loop()) incident_[e.v].push_back(pos);
    }
  }

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  VertexId root() const noexcept { return root_; }

  const Rational& prize(VertexId v) const { return prizes_.at(v); }
  VertexLabel label(VertexId v) const { return labels_.at(v); }
  std::span<const Rational> prizes() const noexcept { return prizes_; }
  std::span<const VertexLabel> labels() const noexcept { return labels_; }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge_at(std::size_t pos) const { return edges_.at(pos); }
  /// Positions (into edges()) of edges incident to v; a self-loop is listed once.
  std::span<const std::size_t> incident(VertexId v) const { return incident_.at(v); }

  std::optional<std::size_t> find_edge(EdgeId id) const {
    auto it = position_.find(id);
    if (it == position_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t position_of(EdgeId id) const {
    auto pos = find_edge(id);
    if (!pos) throw Error(ErrorCode::ForeignEdgeId, "edge " + std::to_string(id));
    return *pos;
  }
  const Edge& edge(EdgeId id) const { return edges_[position_of(id)]; }
  bool has_edge(EdgeId id) const { return position_.contains(id); }

  std::optional<VertexId> find_vertex(VertexLabel label) const {
    for (VertexId v = 0; v < labels_.size(); ++v)
      if (labels_[v] == label) return v;
    return std::nullopt;
  }

  Rational total_prize() const {
    Rational sum = 0;
    for (const auto& p : prizes_) sum += p;
    return sum;
  }
  Rational total_cost() const {
    Rational sum = 0;
    for (const auto& e : edges_) sum += e.cost;
    return sum;
  }
  Rational min_edge_cost() const {
    if (edges_.empty()) return 0;
    Rational best = edges_.front().cost;
    for (const auto& e : edges_) best = std::min(best, e.cost);
    return best;
  }

  /// V*: vertices with positive prize.
  std::vector<VertexId> prize_vertices() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < prizes_.size(); ++v)
      if (prizes_[v] > 0) out.push_back(v);
    return out;
  }

  /// Same vertices and labels, restricted to the given edges. Vertices not
  /// touched by `keep` (other than the root) lose their prize.
  Graph restricted_to(std::span<const EdgeId> keep) const {
    std::vector<Edge> kept;
    std::vector<bool> touched(vertex_count(), false);
    touched[root_] = true;
    for (EdgeId id : keep) {
      const Edge& e = edge(id);
      kept.push_back(e);
      touched[e.u] = touched[e.v] = true;
    }
    std::vector<Rational> prizes = prizes_;
    for (VertexId v = 0; v < prizes.size(); ++v)
      if (!touched[v]) prizes[v] = 0;
    return Graph(labels_, std::move(prizes), std::move(kept), root_);
  }

 private:
  std::vector<VertexLabel> labels_;
  std::vector<Rational> prizes_;
  std::vector<Edge> edges_;
  VertexId root_;
  std::vector<std::vector<std::size_t>> incident_;
  std::unordered_map<EdgeId, std::size_t> position_;
};

/// A validated problem instance: every positive-prize vertex is reachable from
/// the root. Structurally it is a Graph.
using Instance = Graph;

/// Raw, label-based description of an instance as read from a file or
/// produced by a generator.
struct InstanceDescription {
  struct VertexSpec {
    VertexLabel label;
    Rational prize;
  };
  struct EdgeSpec {
    EdgeId id;
    VertexLabel u;
    VertexLabel v;
    Rational cost;
  };
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  VertexLabel root = 0;
};

/// Vertices reachable from the root.
inline std::vector<bool> reachable_from_root(const Graph& g) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{g.root()};
  seen[g.root()] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (std::size_t pos : g.incident(v)) {
      VertexId w = g.edge_at(pos).other(v);
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

inline void check_prize_vertices_reachable(const Graph& g) {
  const auto seen = reachable_from_root(g);
  for (VertexId v : g.prize_vertices())
    if (!seen[v])
      throw Error(ErrorCode::UnreachablePrizeVertex, "vertex " + std::to_string(g.label(v)));
}

inline Instance build_instance(const InstanceDescription& desc) {
  std::unordered_map<VertexLabel, VertexId> index;
  std::vector<VertexLabel> labels;
  std::vector<Rational> prizes;
  for (const auto& vs : desc.vertices) {
    if (!index.emplace(vs.label, labels.size()).second)
      throw Error(ErrorCode::DuplicateVertexId, "vertex " + std::to_string(vs.label));
    labels.push_back(vs.label);
    prizes.push_back(vs.prize);
  }
  auto lookup = [&](VertexLabel l) {
    auto it = index.find(l);
    if (it == index.end()) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(l));
    return it->second;
  };
  std::vector<Edge> edges;
  edges.reserve(desc.edges.size());
  for (const auto& es : desc.edges) edges.push_back(Edge{es.id, lookup(es.u), lookup(es.v), es.cost});
  Graph g(std::move(labels), std::move(prizes), std::move(edges), lookup(desc.root));
  check_prize_vertices_reachable(g);
  return g;
}

inline InstanceDescription describe(const Graph& g) {
  InstanceDescription d;
  for (VertexId v = 0; v < g.vertex_count(); ++v) d.vertices.push_back({g.label(v), g.prize(v)});
  for (const Edge& e : g.edges()) d.edges.push_back({e.id, g.label(e.u), g.label(e.v), e.cost});
  d.root = g.label(g.root());
  return d;
}

/// Edge-induced subgraph: the edges plus their endpoints (and any explicitly
/// listed extra vertices). Both lists are kept sorted.
struct Subgraph {
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;

  bool contains_edge(EdgeId id) const { return std::binary_search(edges.begin(), edges.end(), id); }
  bool contains_vertex(VertexId v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
  }
  friend bool operator==(const Subgraph&, const Subgraph&) = default;
};

inline Subgraph edge_induced(const Graph& g, std::vector<EdgeId> edges,
                             std::span<const VertexId> extra_vertices = {}) {
  Subgraph s;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    s.vertices.push_back(e.u);
    s.vertices.push_back(e.v);
  }
  s.vertices.insert(s.vertices.end(), extra_vertices.begin(), extra_vertices.end());
  std::sort(s.vertices.begin(), s.vertices.end());
  s.vertices.erase(std::unique(s.vertices.begin(), s.vertices.end()), s.vertices.end());
  s.edges = std::move(edges);
  return s;
}

inline Rational cost_of(const Graph& g, std::span<const EdgeId> edges) {
  Rational sum = 0;
  for (EdgeId id : edges) sum += g.edge(id).cost;
  return sum;
}

inline Rational prize_of(const Graph& g, std::span<const VertexId> vertices) {
  Rational sum = 0;
  for (VertexId v : vertices) sum += g.prize(v);
  return sum;
}

/// True iff `edges` (no duplicates) form a tree that contains the root.
inline bool is_rooted_subtree(const Graph& g, std::span<const EdgeId> edges) {
  UnionFind uf(g.vertex_count());
  for (EdgeId id : edges) {
    auto pos = g.find_edge(id);
    if (!pos) return false;
    const Edge& e = g.edge_at(*pos);
    if (!uf.unite(e.u, e.v)) return false;
  }
  const std::size_t root_set = uf.find(g.root());
  for (EdgeId id : edges)
    if (uf.find(g.edge(id).u) != root_set) return false;
  return true;
}

/// A tree in a Graph that contains the root, with cached cost and prize.
class RootedSubtree {
 public:
  /// T_empty = ({r}, {}).
  static RootedSubtree empty(const Graph& g) {
    RootedSubtree t;
    t.vertices_ = {g.root()};
    return t;
  }

  static RootedSubtree from_edges(const Graph& g, std::vector<EdgeId> edges) {
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw Error(ErrorCode::NotARootedSubtree, "repeated edge id");
    for (EdgeId id : edges) g.position_of(id);
    if (!is_rooted_subtree(g, edges))
      throw Error(ErrorCode::NotARootedSubtree, "edges do not form a tree containing the root");
    RootedSubtree t;
    const VertexId root = g.root();
    Subgraph s = edge_induced(g, std::move(edges), std::span<const VertexId>(&root, 1));
    t.edges_ = std::move(s.edges);
    t.vertices_ = std::move(s.vertices);
    t.cost_ = cost_of(g, t.edges_);
    t.prize_ = prize_of(g, t.vertices_);
    return t;
  }

  std::span<const EdgeId> edges() const noexcept { return edges_; }
  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  const Rational& cost() const noexcept { return cost_; }
  const Rational& prize() const noexcept { return prize_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool is_empty() const noexcept { return edges_.empty(); }

  /// p(T)/c(T), or 0 for the empty tree. The root prize is zero.
  Rational density() const { return edges_.empty() ? Rational(0) : prize_ / cost_; }

  bool contains_edge(EdgeId id) const { return std::binary_search(edges_.begin(), edges_.end(), id); }
  bool contains_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }
  Subgraph as_subgraph() const { return Subgraph{edges_, vertices_}; }

  friend bool operator==(const RootedSubtree& a, const RootedSubtree& b) {
    return a.edges_ == b.edges_ && a.vertices_ == b.vertices_;
  }

 private:
  std::vector<EdgeId> edges_;
  std::vector<VertexId> vertices_;
  Rational cost_{0};
  Rational prize_{0};
};

/// A collection of vertex-disjoint trees. Each component is anchored at its
/// vertex closest to the root of the base graph.
struct Forest {
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;
  std::size_t components = 0;
  std::vector<VertexId> anchors;
  Rational cost{0};
  Rational prize{0};
};

}  // namespace ipcst
