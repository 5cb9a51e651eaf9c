#pragma once

// Independent brute-force oracles used to cross-check the library. They share
// only the Graph type with the code under test.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "ipcst/ipcst.hpp"

namespace oracle {

using ipcst::EdgeId;
using ipcst::Graph;
using ipcst::Rational;
using ipcst::VertexId;

inline Rational q(std::int64_t n, std::int64_t d = 1) { return ipcst::make_rational(n, d); }

// Small connected random graph with 3..8 vertices and at most 14 edges.
inline ipcst::Instance small_random_graph(std::uint64_t seed) {
  const auto n = static_cast<std::int64_t>(3 + seed % 6);
  const std::int64_t lo = n - 1;
  const std::int64_t hi = std::min<std::int64_t>(14, n * (n - 1) / 2);
  const std::int64_t m = lo + static_cast<std::int64_t>((seed / 6) % static_cast<std::uint64_t>(hi - lo + 1));
  return ipcst::gen_random_graph(n, m, seed);
}

struct Tree {
  std::vector<EdgeId> edges;  // sorted
  Rational cost{0};
  Rational prize{0};
};

// A subset is a rooted subtree iff it has |vertices|-1 edges, no loop and
// every vertex reaches the root inside the subset.
inline std::optional<Tree> as_rooted_tree(const Graph& g, std::uint64_t subset) {
  std::vector<VertexId> verts{g.root()};
  std::vector<const ipcst::Edge*> chosen;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (!(subset >> i & 1)) continue;
    const auto& e = g.edge_at(i);
    if (e.u == e.v) return std::nullopt;
    chosen.push_back(&e);
    for (VertexId v : {e.u, e.v})
      if (std::find(verts.begin(), verts.end(), v) == verts.end()) verts.push_back(v);
  }
  if (verts.size() != chosen.size() + 1) return std::nullopt;
  std::vector<VertexId> reached{g.root()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto* e : chosen) {
      const bool hu = std::find(reached.begin(), reached.end(), e->u) != reached.end();
      const bool hv = std::find(reached.begin(), reached.end(), e->v) != reached.end();
      if (hu != hv) {
        reached.push_back(hu ? e->v : e->u);
        grew = true;
      }
    }
  }
  if (reached.size() != verts.size()) return std::nullopt;
  Tree t;
  for (const auto* e : chosen) {
    t.edges.push_back(e->id);
    t.cost += e->cost;
  }
  for (VertexId v : verts) t.prize += g.prize(v);
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

inline std::vector<Tree> all_rooted_trees(const Graph& g) {
  std::vector<Tree> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.edge_count()); ++s)
    if (auto t = as_rooted_tree(g, s)) out.push_back(*t);
  return out;
}

inline Rational opt(const std::vector<Tree>& trees, const Rational& budget) {
  Rational best = 0;
  for (const auto& t : trees)
    if (t.cost <= budget && t.prize > best) best = t.prize;
  return best;
}

// Prize of the longest prefix of `order` whose cost fits in `budget`.
inline Rational alg(const Graph& g, const std::vector<EdgeId>& order, const Rational& budget) {
  std::vector<VertexId> verts{g.root()};
  Rational cost = 0, prize = 0;
  for (EdgeId id : order) {
    const auto& e = g.edge(id);
    cost += e.cost;
    if (cost > budget) break;
    for (VertexId v : {e.u, e.v})
      if (std::find(verts.begin(), verts.end(), v) == verts.end()) {
        verts.push_back(v);
        prize += g.prize(v);
      }
  }
  return prize;
}

inline bool is_valid_prefix_order(const Graph& g, const std::vector<EdgeId>& order) {
  for (std::size_t k = 1; k <= order.size(); ++k) {
    std::uint64_t subset = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!g.has_edge(order[i])) return false;
      subset |= std::uint64_t{1} << g.position_of(order[i]);
    }
    if (std::popcount(subset) != static_cast<int>(k) || !as_rooted_tree(g, subset)) return false;
  }
  return true;
}

// max over budgets B of OPT(B) / ALG(B + alpha), at least 1; nullopt = infinite.
// Checks every subtree cost as B, a superset of the frontier costs.
inline std::optional<Rational> min_mu(const Graph& g, const std::vector<Tree>& trees,
                                      const std::vector<EdgeId>& order, const Rational& alpha) {
  Rational worst = 1;
  for (const auto& t : trees) {
    const Rational o = opt(trees, t.cost);
    const Rational a = alg(g, order, t.cost + alpha);
    if (o == 0) continue;
    if (a == 0) return std::nullopt;
    worst = std::max(worst, o / a);
  }
  return worst;
}

inline bool less_mu(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

// Minimum of min_mu over every ordering that reaches all prize vertices, by
// depth-first search over valid prefixes.
inline std::optional<Rational> best_mu(const Graph& g, const Rational& alpha) {
  const auto trees = all_rooted_trees(g);
  const Rational total = g.total_prize();
  std::optional<Rational> best;
  bool have = false;
  std::vector<EdgeId> order;
  std::vector<bool> in(g.vertex_count(), false);
  in[g.root()] = true;
  Rational prize = 0;
  std::function<void()> dfs = [&] {
    if (prize == total) {
      auto m = min_mu(g, trees, order, alpha);
      if (!have || less_mu(m, best)) best = m;
      have = true;
      return;
    }
    for (const auto& e : g.edges()) {
      if (in[e.u] == in[e.v]) continue;
      const VertexId w = in[e.u] ? e.v : e.u;
      in[w] = true;
      prize += g.prize(w);
      order.push_back(e.id);
      dfs();
      order.pop_back();
      prize -= g.prize(w);
      in[w] = false;
    }
  };
  dfs();
  return best;
}

// Max density, then fewest edges, then smallest edge-id list.
inline Tree min_max(const Graph& g) {
  std::optional<Tree> best;
  for (const auto& t : all_rooted_trees(g)) {
    if (t.edges.empty() || t.prize == 0) continue;
    if (!best) {
      best = t;
      continue;
    }
    const Rational d = t.prize / t.cost, bd = best->prize / best->cost;
    if (d > bd || (d == bd && (t.edges.size() < best->edges.size() ||
                               (t.edges.size() == best->edges.size() && t.edges < best->edges))))
      best = t;
  }
  return *best;
}

inline Rational max_density(const Graph& g) {
  Rational best = 0;
  for (const auto& t : all_rooted_trees(g))
    if (!t.edges.empty() && t.prize / t.cost > best) best = t.prize / t.cost;
  return best;
}

}  // namespace oracle
