#pragma once

#include <span>
#include <vector>

#include "ipcst/graph.hpp"

namespace ipcst {

/// G/T: the rooted subtree T collapsed into the root.
///
/// Surviving edges keep their ids, costs and multiplicity, so parallel edges
/// and self-loops can appear. `graph` is the contracted multigraph itself.
struct ContractedGraph {
  const Graph* parent = nullptr;
  std::vector<EdgeId> contracted;         // E_T, sorted
  std::vector<VertexId> vertex_map;       // parent vertex -> contracted vertex
  std::vector<VertexId> representative;   // contracted vertex -> parent vertex
  Graph graph;

  bool is_contracted(EdgeId id) const {
    return std::binary_search(contracted.begin(), contracted.end(), id);
  }
};

inline ContractedGraph contract(const Graph& g, const RootedSubtree& t) {
  ContractedGraph cg;
  cg.parent = &g;
  cg.contracted.assign(t.edges().begin(), t.edges().end());

  constexpr VertexId unassigned = static_cast<VertexId>(-1);
  cg.vertex_map.assign(g.vertex_count(), unassigned);
  std::vector<VertexLabel> labels;
  std::vector<Rational> prizes;
  VertexId merged = unassigned;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (t.contains_vertex(v)) {
      if (merged == unassigned) {
        merged = labels.size();
        labels.push_back(g.label(g.root()));
        prizes.push_back(0);
        cg.representative.push_back(g.root());
      }
      cg.vertex_map[v] = merged;
    } else {
      cg.vertex_map[v] = labels.size();
      labels.push_back(g.label(v));
      prizes.push_back(g.prize(v));
      cg.representative.push_back(v);
    }
  }

  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - t.size());
  for (const Edge& e : g.edges())
    if (!t.contains_edge(e.id)) edges.push_back(Edge{e.id, cg.vertex_map[e.u], cg.vertex_map[e.v], e.cost});
  cg.graph = Graph(std::move(labels), std::move(prizes), std::move(edges), merged);
  return cg;
}

inline ContractedGraph contract(const Graph& g, std::vector<EdgeId> tree_edges) {
  return contract(g, RootedSubtree::from_edges(g, std::move(tree_edges)));
}

/// C+: the subgraph of the parent graph carrying the same edge ids as C.
inline Subgraph extend(const ContractedGraph& cg, std::span<const EdgeId> edges) {
  for (EdgeId id : edges)
    if (!cg.graph.has_edge(id))
      throw Error(ErrorCode::ForeignEdgeId, "edge " + std::to_string(id) + " is not a surviving edge");
  return edge_induced(*cg.parent, std::vector<EdgeId>(edges.begin(), edges.end()));
}

/// S/T: the edges of S that survive the contraction, as a subgraph of G/T.
inline Subgraph contract_subgraph(const ContractedGraph& cg, const Subgraph& s) {
  std::vector<EdgeId> kept;
  for (EdgeId id : s.edges) {
    if (!cg.parent->has_edge(id)) throw Error(ErrorCode::ForeignEdgeId, "edge " + std::to_string(id));
    if (!cg.is_contracted(id)) kept.push_back(id);
  }
  return edge_induced(cg.graph, std::move(kept));
}

}  // namespace ipcst
