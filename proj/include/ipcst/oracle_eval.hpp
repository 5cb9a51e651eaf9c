#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "ipcst/capacity_scaling.hpp"
#include "ipcst/contraction.hpp"
#include "ipcst/enumeration.hpp"
#include "ipcst/graph_greedy.hpp"
#include "ipcst/metrics.hpp"
#include "ipcst/tree_greedy.hpp"

namespace ipcst {

struct Breakpoint {
  Rational budget{0};
  Rational prize{0};
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Right-continuous step function B -> p(ALG(B)).
struct StepProfile {
  std::vector<Breakpoint> breakpoints;

  Rational value_at(const Rational& budget) const {
    Rational v = 0;
    for (const auto& bp : breakpoints) {
      if (bp.budget > budget) break;
      v = bp.prize;
    }
    return v;
  }
  const Rational& final_prize() const { return breakpoints.back().prize; }
};

/// Checks the prefix property and returns the profile of every prefix.
inline StepProfile alg_profile(const Graph& g, const IncrementalSolution& pi) {
  StepProfile profile;
  profile.breakpoints.push_back({Rational(0), Rational(0)});
  std::vector<bool> in_tree(g.vertex_count(), false);
  in_tree[g.root()] = true;
  Rational cost = 0, prize = 0;
  for (std::size_t i = 0; i < pi.order.size(); ++i) {
    const auto pos = g.find_edge(pi.order[i]);
    if (!pos) throw Error(ErrorCode::InvalidOrdering, "unknown edge " + std::to_string(pi.order[i]));
    const Edge& e = g.edge_at(*pos);
    if (in_tree[e.u] == in_tree[e.v])
      throw Error(ErrorCode::InvalidOrdering,
                  "prefix " + std::to_string(i + 1) + " is not a rooted subtree");
    const VertexId w = in_tree[e.u] ? e.v : e.u;
    in_tree[w] = true;
    cost += e.cost;
    prize += g.prize(w);
    profile.breakpoints.push_back({cost, prize});
  }
  return profile;
}

/// True iff the ordering is valid and its final tree holds every prize vertex.
inline bool spans_prize_vertices(const Graph& g, const IncrementalSolution& pi) {
  const StepProfile profile = alg_profile(g, pi);
  return profile.final_prize() == g.total_prize();
}

inline StepProfile require_spanning_profile(const Graph& g, const IncrementalSolution& pi) {
  StepProfile profile = alg_profile(g, pi);
  if (profile.final_prize() != g.total_prize())
    throw Error(ErrorCode::InvalidOrdering, "ordering does not reach every prize vertex");
  return profile;
}

struct CompetitiveWitness {
  Rational budget{0};
  Rational opt{0};
  Rational alg{0};
};

struct CompetitiveReport {
  Rational alpha{0};
  Rational mu{1};
  bool holds = true;
  std::optional<CompetitiveWitness> witness;  // first violated budget
  std::size_t budgets_checked = 0;
};

/// mu * p(ALG(B + alpha)) >= p(OPT(B)) for every B. Both sides are step
/// functions and the left side is nondecreasing, so frontier costs suffice.
inline CompetitiveReport verify_competitive(const ParetoFrontier& frontier, const StepProfile& profile,
                                            const Rational& alpha, const Rational& mu) {
  CompetitiveReport report;
  report.alpha = alpha;
  report.mu = mu;
  for (const auto& pt : frontier.points) {
    ++report.budgets_checked;
    const Rational alg = profile.value_at(pt.cost + alpha);
    if (mu * alg < pt.prize) {
      report.holds = false;
      report.witness = CompetitiveWitness{pt.cost, pt.prize, alg};
      break;
    }
  }
  return report;
}

inline CompetitiveReport verify_competitive(const Graph& g, const IncrementalSolution& pi, const Rational& alpha,
                                            const Rational& mu, std::size_t bound = kDefaultEnumerationBound) {
  if (alpha < 0 || mu < 1) throw Error(ErrorCode::BadParameter, "need alpha >= 0 and mu >= 1");
  const StepProfile profile = require_spanning_profile(g, pi);
  return verify_competitive(pareto_frontier(g, bound), profile, alpha, mu);
}

/// Smallest mu >= 1 for which (alpha, mu) holds; infinity when a positive
/// optimum meets an empty prefix.
inline ExtRational min_mu(const ParetoFrontier& frontier, const StepProfile& profile, const Rational& alpha) {
  ExtRational worst = Rational(1);
  for (const auto& pt : frontier.points) worst = max(worst, ratio(pt.prize, profile.value_at(pt.cost + alpha)));
  return worst;
}

inline ExtRational min_mu(const Graph& g, const IncrementalSolution& pi, const Rational& alpha,
                          std::size_t bound = kDefaultEnumerationBound) {
  const StepProfile profile = require_spanning_profile(g, pi);
  return min_mu(pareto_frontier(g, bound), profile, alpha);
}

/// Smallest alpha >= 0 for which (alpha, mu) holds. Each frontier point needs
/// alpha in {0} or at a profile breakpoint minus its cost, so only those
/// shifts are tried. Infinity if none works.
inline ExtRational min_alpha(const ParetoFrontier& frontier, const StepProfile& profile, const Rational& mu) {
  std::vector<Rational> candidates{Rational(0)};
  for (const auto& pt : frontier.points)
    for (const auto& bp : profile.breakpoints)
      if (bp.budget > pt.cost) candidates.push_back(bp.budget - pt.cost);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& a : candidates)
    if (verify_competitive(frontier, profile, a, mu).holds) return a;
  return ExtRational::infinity();
}

inline ExtRational min_alpha(const Graph& g, const IncrementalSolution& pi, const Rational& mu,
                             std::size_t bound = kDefaultEnumerationBound) {
  const StepProfile profile = require_spanning_profile(g, pi);
  return min_alpha(pareto_frontier(g, bound), profile, mu);
}

struct BestOrdering {
  IncrementalSolution solution;
  ExtRational mu;
};

/// An ordering minimizing min_mu(g, pi, alpha) over all incremental
/// solutions. Dynamic program over rooted subtrees: the ratio charged when
/// edge e is appended to a prefix of cost C and prize P is the worst
/// OPT(B)/P over frontier budgets with C <= B + alpha < C + c(e).
inline BestOrdering best_incremental_ordering(const Graph& g, const Rational& alpha,
                                              std::size_t bound = kDefaultEnumerationBound) {
  if (alpha < 0) throw Error(ErrorCode::BadParameter, "alpha must be nonnegative");
  const auto records = rooted_subtree_records(g, bound);
  const ParetoFrontier frontier = frontier_from_records(records);
  const Rational total = g.total_prize();

  std::unordered_map<EdgeMask, std::size_t> index;
  for (std::size_t i = 0; i < records.size(); ++i) index.emplace(records[i].mask, i);
  std::vector<std::size_t> by_size(records.size());
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) {
    return std::popcount(records[a].mask) < std::popcount(records[b].mask);
  });

  // Worst OPT(B) / prize over frontier budgets B with lo <= B + alpha < hi.
  auto charge = [&](const Rational& lo, const Rational& hi, const Rational& prize) {
    std::optional<Rational> opt;
    for (const auto& pt : frontier.points) {
      const Rational shifted = pt.cost + alpha;
      if (shifted >= hi) break;
      if (shifted >= lo) opt = pt.prize;
    }
    return opt ? ratio(*opt, prize) : ExtRational(Rational(0));
  };

  std::vector<std::optional<ExtRational>> value(records.size());
  std::vector<std::pair<std::size_t, EdgeId>> parent(records.size(), {static_cast<std::size_t>(-1), 0});
  value[index.at(0)] = Rational(1);

  std::vector<std::size_t> edge_positions(g.edge_count());
  std::iota(edge_positions.begin(), edge_positions.end(), 0);
  std::sort(edge_positions.begin(), edge_positions.end(),
            [&](std::size_t a, std::size_t b) { return g.edge_at(a).id < g.edge_at(b).id; });

  std::optional<std::size_t> best_terminal;
  std::vector<bool> in_tree(g.vertex_count());
  for (std::size_t s : by_size) {
    if (!value[s]) continue;
    const SubtreeRecord& rec = records[s];
    if (rec.prize == total) {
      auto better = [&](std::size_t a, std::size_t b) {
        if (*value[a] != *value[b]) return *value[a] < *value[b];
        return std::popcount(records[a].mask) < std::popcount(records[b].mask);
      };
      if (!best_terminal || better(s, *best_terminal)) best_terminal = s;
      continue;
    }
    std::fill(in_tree.begin(), in_tree.end(), false);
    in_tree[g.root()] = true;
    for (std::size_t pos = 0; pos < g.edge_count(); ++pos)
      if (rec.mask >> pos & 1) in_tree[g.edge_at(pos).u] = in_tree[g.edge_at(pos).v] = true;
    for (std::size_t pos : edge_positions) {
      const Edge& e = g.edge_at(pos);
      if (in_tree[e.u] == in_tree[e.v]) continue;
      const std::size_t next = index.at(rec.mask | EdgeMask{1} << pos);
      const ExtRational v = max(*value[s], charge(rec.cost, rec.cost + e.cost, rec.prize));
      if (!value[next] || v < *value[next]) {
        value[next] = v;
        parent[next] = {s, e.id};
      }
    }
  }

  BestOrdering out;
  std::size_t at = *best_terminal;
  out.mu = *value[at];
  while (records[at].mask != 0) {
    out.solution.order.push_back(parent[at].second);
    at = parent[at].first;
  }
  std::reverse(out.solution.order.begin(), out.solution.order.end());
  return out;
}

/// Brute-force witness that a tree T with root r_T has a forest F containing
/// r_T with at most k components, c(F) <= lambda c(T) and
/// p(F) >= (1 - 2^{1-k}) lambda p(T). Components may be isolated vertices.
/// Returns the feasible forest of largest prize (fewest edges, then smallest
/// edge ids), or nullopt if it misses the prize bound.
inline std::optional<Forest> forest_extraction(const Graph& tree, VertexId tree_root, const Rational& lambda,
                                               std::size_t k, std::size_t bound = 16) {
  if (lambda < 0 || lambda > 1) throw Error(ErrorCode::BadParameter, "lambda must lie in [0, 1]");
  if (k < 1) throw Error(ErrorCode::BadParameter, "k must be at least 1");
  if (tree.edge_count() > bound)
    throw Error(ErrorCode::TreeTooLarge,
                std::to_string(tree.edge_count()) + " edges exceeds bound " + std::to_string(bound));
  std::vector<EdgeId> all;
  for (const Edge& e : tree.edges()) all.push_back(e.id);
  if (!detail::is_tree(tree, all)) throw Error(ErrorCode::NotATree, "forest extraction needs a tree");
  const Subgraph whole = edge_induced(tree, all, std::span<const VertexId>(&tree_root, 1));
  if (!all.empty() && !whole.contains_vertex(tree_root) )
    throw Error(ErrorCode::NotInTree, "root not in tree");
  const Rational tree_cost = cost_of(tree, whole.edges);
  const Rational tree_prize = prize_of(tree, whole.vertices);
  const Rational budget = lambda * tree_cost;
  const Rational target = (1 - Rational(1) / Rational(boost::multiprecision::mpz_int(1) << (k - 1))) * lambda * tree_prize;

  // Spare component slots go to isolated vertices of largest prize.
  std::vector<VertexId> by_prize;
  for (VertexId v = 0; v < tree.vertex_count(); ++v)
    if (v != tree_root && tree.prize(v) > 0) by_prize.push_back(v);
  std::stable_sort(by_prize.begin(), by_prize.end(),
                   [&](VertexId a, VertexId b) { return tree.prize(a) > tree.prize(b); });

  const std::size_t m = tree.edge_count();
  bool found = false;
  Rational best_prize = -1;
  std::vector<EdgeId> best_edges;
  std::vector<VertexId> best_singles;
  for (EdgeMask mask = 0; mask < (EdgeMask{1} << m); ++mask) {
    Rational cost = 0;
    UnionFind uf(tree.vertex_count());
    std::vector<bool> used(tree.vertex_count(), false);
    used[tree_root] = true;
    for (std::size_t pos = 0; pos < m; ++pos) {
      if (!(mask >> pos & 1)) continue;
      const Edge& e = tree.edge_at(pos);
      cost += e.cost;
      uf.unite(e.u, e.v);
      used[e.u] = used[e.v] = true;
    }
    if (cost > budget) continue;
    std::size_t components = 0;
    Rational prize = 0;
    for (VertexId v = 0; v < tree.vertex_count(); ++v) {
      if (!used[v]) continue;
      prize += tree.prize(v);
      if (uf.find(v) == v) ++components;
    }
    if (components > k) continue;
    std::vector<VertexId> singles;
    for (VertexId v : by_prize) {
      if (singles.size() + components == k) break;
      if (used[v]) continue;
      singles.push_back(v);
      prize += tree.prize(v);
    }
    const auto edges = mask_to_edges(tree, mask);
    const bool better = !found || prize > best_prize ||
                        (prize == best_prize && (edges.size() < best_edges.size() ||
                                                 (edges.size() == best_edges.size() && edges < best_edges)));
    if (better) {
      found = true;
      best_prize = prize;
      best_edges = edges;
      best_singles = singles;
    }
  }
  if (!found || best_prize < target) return std::nullopt;
  Forest f;
  std::vector<VertexId> extra = best_singles;
  extra.push_back(tree_root);
  const Subgraph s = edge_induced(tree, best_edges, extra);
  const RootedTreeView view(tree, all, tree_root);
  for (VertexId v : s.vertices) {
    // The component's anchor is its vertex closest to r_T.
    const auto pe = view.parent_edge(v);
    const bool top = v == tree_root || !pe || !std::binary_search(best_edges.begin(), best_edges.end(), *pe);
    if (top) f.anchors.push_back(v);
  }
  f.components = f.anchors.size();
  f.edges = s.edges;
  f.vertices = s.vertices;
  f.cost = cost_of(tree, s.edges);
  f.prize = best_prize;
  return f;
}

/// Outcome of one of the structural checks below; `detail` names the first
/// failure.
struct CheckResult {
  bool ok = true;
  std::string detail;

  static CheckResult fail(std::string what) { return {false, std::move(what)}; }
};

/// Every block of a tree-greedy trace consists of exactly the edges of the
/// extension fixed when it opened; the steps inside it fix sub-extensions of
/// strictly higher density.
inline CheckResult check_consecutive_blocks(const GreedyTrace& trace) {
  std::size_t s = 0;
  while (s < trace.steps.size()) {
    const GreedyStep& open = trace.steps[s];
    const auto& ext = open.extension;
    if (s + ext.size() > trace.steps.size())
      return CheckResult::fail("block at step " + std::to_string(s) + " runs past the end");
    std::vector<EdgeId> added;
    for (std::size_t t = s; t < s + ext.size(); ++t) {
      const GreedyStep& step = trace.steps[t];
      added.push_back(step.edge);
      if (!std::includes(ext.begin(), ext.end(), step.extension.begin(), step.extension.end()))
        return CheckResult::fail("step " + std::to_string(t) + " leaves the open extension");
      if (t > s && !(step.density > open.density))
        return CheckResult::fail("step " + std::to_string(t) + " does not increase density");
    }
    std::sort(added.begin(), added.end());
    if (added != ext) return CheckResult::fail("block at step " + std::to_string(s) + " differs from extension");
    s += ext.size();
  }
  return {};
}

/// In every fixed min-max subtree T of a tree-greedy run, each branch T_e has
/// density at least d(T), strictly more unless T_e = T.
inline CheckResult check_branch_densities(const Graph& g, const GreedyTrace& trace) {
  std::vector<EdgeId> prefix;
  for (const GreedyStep& step : trace.steps) {
    const ContractedGraph cg = contract(g, prefix);
    const Graph& h = cg.graph;
    const RootedTreeView view(h, step.extension, h.root());
    for (EdgeId e : step.extension) {
      const Subgraph branch = view.branch_at_edge(e);
      const Edge& edge = h.edge(e);
      const VertexId top = view.parent_edge(edge.u) == e ? edge.v : edge.u;
      const Rational d = (prize_of(h, branch.vertices) - h.prize(top)) / cost_of(h, branch.edges);
      const bool whole = branch.edges.size() == step.extension.size();
      if (whole ? d != step.density : !(d > step.density))
        return CheckResult::fail("iteration " + std::to_string(step.iteration) + ", branch at edge " +
                                 std::to_string(e));
    }
    prefix.push_back(step.edge);
  }
  return {};
}

/// p(ALG(B + slack)) >= g(B) for every B in [0, total cost], where g is the
/// piecewise-linear function through the cumulative (cost, prize) of the
/// blocks, with slope equal to each block's density.
inline CheckResult check_block_lower_bound(const StepProfile& profile, const std::vector<GreedyBlock>& blocks,
                                           const Rational& slack) {
  std::vector<Rational> xs{Rational(0)}, ys{Rational(0)};
  for (const auto& b : blocks) {
    xs.push_back(xs.back() + b.cost);
    ys.push_back(ys.back() + b.gain);
  }
  auto lower = [&](const Rational& budget) {
    if (budget <= 0) return Rational(0);
    for (std::size_t i = 1; i < xs.size(); ++i)
      if (budget <= xs[i]) return ys[i - 1] + (ys[i] - ys[i - 1]) * (budget - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return ys.back();
  };
  const auto& bps = profile.breakpoints;
  for (std::size_t i = 0; i < bps.size(); ++i) {
    // ALG(x) = bps[i].prize on [bps[i].budget, next); x = B + slack.
    if (bps[i].budget - slack > xs.back()) break;
    Rational right = i + 1 < bps.size() ? bps[i + 1].budget - slack : xs.back();
    if (right > xs.back()) right = xs.back();
    if (right < 0) continue;
    if (bps[i].prize < lower(right))
      return CheckResult::fail("prize " + to_string(bps[i].prize) + " below bound " + to_string(lower(right)) +
                               " at budget " + to_string(right));
  }
  return {};
}

/// p(ALG(c(T_1))) = d(T_1) c(T_1) and p(ALG(B + slack)) >= d(T_1) B for B <= c(T_1).
inline CheckResult check_first_block(const StepProfile& profile, const std::vector<GreedyBlock>& blocks,
                                     const Rational& slack) {
  if (blocks.empty()) return {};
  const GreedyBlock& first = blocks.front();
  if (profile.value_at(first.cost) != first.gain) return CheckResult::fail("prize at c(T_1) differs from p(T_1)");
  return check_block_lower_bound(profile, {first}, slack);
}

/// Block densities measured inside the final tree are nonincreasing.
inline CheckResult check_block_density_chain(const Graph& g, const IncrementalSolution& pi,
                                             const std::vector<GreedyBlock>& blocks) {
  const RootedSubtree final_tree = RootedSubtree::from_edges(g, pi.order);
  std::optional<Rational> previous;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Rational d = density_over(g, final_tree, blocks[i].edges);
    if (previous && d > *previous)
      return CheckResult::fail("block " + std::to_string(i) + " density " + to_string(d) + " exceeds " +
                               to_string(*previous));
    previous = d;
  }
  return {};
}

/// p(ALG((2^{k+1} - 1) chi)) >= p(T_k) for every phase k of capacity scaling.
inline CheckResult check_scaling_chain(const Graph& g, const ScalingResult& run) {
  const StepProfile profile = alg_profile(g, run.solution);
  for (const auto& phase : run.phases) {
    const Rational budget = (Rational(boost::multiprecision::mpz_int(1) << (phase.iteration + 1)) - 1) * run.chi;
    if (profile.value_at(budget) < phase.tree_prize)
      return CheckResult::fail("phase " + std::to_string(phase.iteration));
  }
  return {};
}

/// p(OPT(B + h chi)) >= (1 - 2^{-h}) / delta * p(OPT(delta B)) at every
/// budget where either side can change.
inline CheckResult check_opt_scaling(const ParetoFrontier& frontier, const Rational& chi, const Rational& delta,
                                     std::size_t h) {
  const Rational factor = (1 - Rational(1) / Rational(boost::multiprecision::mpz_int(1) << h)) / delta;
  std::vector<Rational> budgets;
  for (const auto& pt : frontier.points) {
    budgets.push_back(pt.cost);
    budgets.push_back(pt.cost / delta);
  }
  for (const auto& b : budgets)
    if (frontier.opt(b + Rational(static_cast<long>(h)) * chi) < factor * frontier.opt(delta * b))
      return CheckResult::fail("budget " + to_string(b));
  return {};
}

}  // namespace ipcst
