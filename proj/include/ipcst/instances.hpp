#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ipcst/graph.hpp"

namespace ipcst {

// Vertex labels: the root is 0, other vertices are numbered from 1.
// Edge ids are numbered from 1 in the order listed in each generator.

namespace detail {

class InstanceBuilder {
 public:
  InstanceBuilder() { desc_.vertices.push_back({0, Rational(0)}); }

  VertexLabel vertex(const Rational& prize) {
    const auto label = static_cast<VertexLabel>(desc_.vertices.size());
    desc_.vertices.push_back({label, prize});
    return label;
  }
  EdgeId edge(VertexLabel u, VertexLabel v, const Rational& cost) {
    const auto id = static_cast<EdgeId>(desc_.edges.size() + 1);
    desc_.edges.push_back({id, u, v, cost});
    return id;
  }
  Instance build() const { return build_instance(desc_); }

 private:
  InstanceDescription desc_;
};

inline void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::BadParameter, what);
}

}  // namespace detail

/// Two edges at the root: cost chi/2 to prize delta, cost chi to prize 1.
inline Instance gen_fig1(const Rational& chi, const Rational& delta) {
  detail::require(chi > 0, "chi must be positive");
  detail::require(delta > 0 && delta < 1, "delta must lie in (0, 1)");
  detail::InstanceBuilder b;
  b.edge(0, b.vertex(delta), chi / 2);
  b.edge(0, b.vertex(1), chi);
  return b.build();
}

/// Light edge (cost eps, prize eps) and heavy edge (cost 1, prize 2).
inline Instance gen_fig5(const Rational& eps) {
  detail::require(eps > 0, "eps must be positive");
  detail::InstanceBuilder b;
  b.edge(0, b.vertex(eps), eps);
  b.edge(0, b.vertex(2), 1);
  return b.build();
}

/// Heavy edge (cost chi, prize 2 chi) plus k light edges (cost and prize chi/k).
inline Instance gen_fig6a(const Rational& chi, std::int64_t k) {
  detail::require(chi > 0, "chi must be positive");
  detail::require(k >= 1, "k must be at least 1");
  detail::InstanceBuilder b;
  b.edge(0, b.vertex(2 * chi), chi);
  const Rational light = chi / k;
  for (std::int64_t i = 0; i < k; ++i) b.edge(0, b.vertex(light), light);
  return b.build();
}

/// Edges (cost 1/2, prize 1) and (cost 1, prize k).
inline Instance gen_fig6b(std::int64_t k) {
  detail::require(k >= 1, "k must be at least 1");
  detail::InstanceBuilder b;
  b.edge(0, b.vertex(1), make_rational(1, 2));
  b.edge(0, b.vertex(k), 1);
  return b.build();
}

/// Hub x behind a cost-3 edge, three prize-2 vertices joined to x by unit
/// edges and to the root by cost 3+eps, and a prize-eps vertex at cost 2 eps.
inline Instance gen_fig7(const Rational& eps) {
  detail::require(eps > 0 && eps < make_rational(1, 3), "eps must lie in (0, 1/3)");
  detail::InstanceBuilder b;
  const VertexLabel x = b.vertex(0);
  b.edge(0, x, 3);
  std::vector<VertexLabel> leaves;
  for (int i = 0; i < 3; ++i) {
    leaves.push_back(b.vertex(2));
    b.edge(x, leaves.back(), 1);
  }
  for (VertexLabel leaf : leaves) b.edge(0, leaf, 3 + eps);
  b.edge(0, b.vertex(eps), 2 * eps);
  return b.build();
}

/// n copies of a four-edge gadget sharing the root: a_i = (r, u_i) of cost 3,
/// (r, w_i) of cost 2, (w_i, v_i) of cost 3, (w_i, u_i) of cost 2, with
/// p(u_i) = p(v_i) = 3.
inline Instance gen_fig8(std::int64_t n) {
  detail::require(n >= 1, "n must be at least 1");
  detail::InstanceBuilder b;
  for (std::int64_t i = 0; i < n; ++i) {
    const VertexLabel u = b.vertex(3);
    const VertexLabel w = b.vertex(0);
    const VertexLabel v = b.vertex(3);
    b.edge(0, u, 3);
    b.edge(0, w, 2);
    b.edge(w, v, 3);
    b.edge(w, u, 2);
  }
  return b.build();
}

/// Path r - r' - x - A with a detour r' - u - x and a leaf S at u. Unit costs
/// except (r', u), which costs c_e2. p(A) = 3, p(S) = 2.
inline Instance gen_fig4(const Rational& c_e2 = 1) {
  detail::require(c_e2 > 0, "cost must be positive");
  detail::InstanceBuilder b;
  const VertexLabel r1 = b.vertex(0), x = b.vertex(0), a = b.vertex(3), u = b.vertex(0), s = b.vertex(2);
  b.edge(0, r1, 1);
  b.edge(r1, x, 1);
  b.edge(x, a, 1);
  b.edge(r1, u, c_e2);
  b.edge(u, x, 1);
  b.edge(u, s, 1);
  return b.build();
}

namespace detail {

// Draws from the raw engine output so instances are identical on every platform.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  Rational quarter_step() { return make_rational(static_cast<std::int64_t>(1 + below(12)), 4); }
  Rational prize() { return below(4) == 0 ? Rational(0) : quarter_step(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace detail

/// Random tree on n vertices: each vertex attaches to a uniformly chosen
/// earlier one. Costs lie in {1/4, ..., 3}; prizes are zero with probability
/// 1/4 and otherwise lie in the same range.
inline Instance gen_random_tree(std::int64_t n, std::uint64_t seed) {
  detail::require(n >= 1, "n must be at least 1");
  detail::PortableRng rng(seed);
  detail::InstanceBuilder b;
  for (std::int64_t i = 1; i < n; ++i) {
    const auto parent = static_cast<VertexLabel>(rng.below(static_cast<std::uint64_t>(i)));
    const Rational cost = rng.quarter_step();
    b.edge(parent, b.vertex(rng.prize()), cost);
  }
  return b.build();
}

/// Random connected simple graph: a random tree as above plus m - (n-1)
/// further distinct edges with the same cost distribution.
inline Instance gen_random_graph(std::int64_t n, std::int64_t m, std::uint64_t seed) {
  detail::require(n >= 1, "n must be at least 1");
  detail::require(m >= n - 1, "m must be at least n - 1");
  detail::require(m <= n * (n - 1) / 2, "m exceeds the number of vertex pairs");
  detail::PortableRng rng(seed);
  detail::InstanceBuilder b;
  std::set<std::pair<VertexLabel, VertexLabel>> used;
  for (std::int64_t i = 1; i < n; ++i) {
    const auto parent = static_cast<VertexLabel>(rng.below(static_cast<std::uint64_t>(i)));
    const Rational cost = rng.quarter_step();
    const VertexLabel child = b.vertex(rng.prize());
    b.edge(parent, child, cost);
    used.emplace(parent, child);
  }
  for (std::int64_t extra = n - 1; extra < m;) {
    auto u = static_cast<VertexLabel>(rng.below(static_cast<std::uint64_t>(n)));
    auto v = static_cast<VertexLabel>(rng.below(static_cast<std::uint64_t>(n)));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (!used.emplace(u, v).second) continue;
    b.edge(u, v, rng.quarter_step());
    ++extra;
  }
  return b.build();
}

/// A named family with its parameters, as accepted by the command line.
struct GeneratorSpec {
  std::string family;   // fig1 fig4 fig5 fig6a fig6b fig7 fig8 random-tree random-graph
  Rational chi{1};
  Rational delta{make_rational(1, 100)};
  Rational eps{make_rational(1, 10)};
  Rational cost{1};
  std::int64_t k = 1;
  std::int64_t n = 1;
  std::int64_t m = 0;
  std::uint64_t seed = 0;
};

inline Instance generate(const GeneratorSpec& spec) {
  const std::string& f = spec.family;
  if (f == "fig1") return gen_fig1(spec.chi, spec.delta);
  if (f == "fig4") return gen_fig4(spec.cost);
  if (f == "fig5") return gen_fig5(spec.eps);
  if (f == "fig6a") return gen_fig6a(spec.chi, spec.k);
  if (f == "fig6b") return gen_fig6b(spec.k);
  if (f == "fig7") return gen_fig7(spec.eps);
  if (f == "fig8") return gen_fig8(spec.n);
  if (f == "random-tree") return gen_random_tree(spec.n, spec.seed);
  if (f == "random-graph") return gen_random_graph(spec.n, spec.m, spec.seed);
  throw Error(ErrorCode::BadParameter, "unknown family '" + f + "'");
}

}  // namespace ipcst
