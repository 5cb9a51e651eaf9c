#include <gtest/gtest.h>

#include <set>

#include "ipcst/ipcst.hpp"
#include "test_support.hpp"

using namespace ipcst;
using oracle::q;

namespace {

std::vector<EdgeId> ids(const RootedSubtree& t) { return {t.edges().begin(), t.edges().end()}; }

Instance triangle() {
  return build_instance(
      {{{0, 0}, {1, 1}, {2, 1}}, {{1, 0, 1, q(1)}, {2, 0, 2, q(1)}, {3, 1, 2, q(1)}}, 0});
}

}  // namespace

TEST(Enumeration, SmallCounts) {
  // Empty, {1}, {2}, {1,2}, {1,3}, {2,3}.
  EXPECT_EQ(enumerate_rooted_subtrees(triangle()).size(), 6u);
  EXPECT_EQ(enumerate_rooted_subtrees(build_instance({{{0, 0}, {1, 1}}, {{1, 0, 1, q(1)}}, 0})).size(), 2u);
  EXPECT_EQ(enumerate_rooted_subtrees(build_instance({{{0, 0}}, {}, 0})).size(), 1u);
}

TEST(Enumeration, MatchesSubsetOracleWithoutDuplicates) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::int64_t n = 3 + static_cast<std::int64_t>(seed % 5);
    const std::int64_t m = std::min<std::int64_t>(n * (n - 1) / 2, n - 1 + static_cast<std::int64_t>(seed % 5));
    const Instance g = gen_random_graph(n, m, seed);
    std::set<std::vector<EdgeId>> seen;
    for (const auto& t : enumerate_rooted_subtrees(g))
      EXPECT_TRUE(seen.insert(ids(t)).second) << "duplicate at seed " << seed;
    std::set<std::vector<EdgeId>> expected;
    for (const auto& t : oracle::all_rooted_trees(g)) expected.insert(t.edges);
    EXPECT_EQ(seen, expected) << "seed " << seed;
  }
}

TEST(Enumeration, HandlesParallelEdgesAndLoops) {
  const Instance g = build_instance(
      {{{0, 0}, {1, 1}}, {{1, 0, 1, q(1)}, {2, 0, 1, q(2)}, {3, 1, 1, q(1)}, {4, 0, 0, q(1)}}, 0});
  std::set<std::vector<EdgeId>> seen;
  for (const auto& t : enumerate_rooted_subtrees(g)) seen.insert(ids(t));
  EXPECT_EQ(seen, (std::set<std::vector<EdgeId>>{{}, {1}, {2}}));
}

TEST(Enumeration, RefusesLargeInstances) {
  const Instance g = gen_random_graph(8, 21, 1);
  try {
    enumerate_rooted_subtrees(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InstanceTooLarge);
  }
  EXPECT_NO_THROW(for_each_rooted_subtree(gen_fig8(1), [](EdgeMask, const Rational&, const Rational&) {}, 4));
  EXPECT_THROW(for_each_rooted_subtree(gen_fig8(2), [](EdgeMask, const Rational&, const Rational&) {}, 4), Error);
}

TEST(Enumeration, Fig4ContainsBothMaximumDensityTrees) {
  std::set<std::vector<EdgeId>> seen;
  for (const auto& t : enumerate_rooted_subtrees(gen_fig4())) seen.insert(ids(t));
  EXPECT_TRUE(seen.count({1, 2, 3}));
  EXPECT_TRUE(seen.count({1, 3, 4, 5, 6}));
}

TEST(MinMaxExact, Examples) {
  const RootedSubtree unit = min_max_subtree_exact(gen_fig4());
  EXPECT_EQ(unit.density(), 1);
  EXPECT_EQ(ids(unit), (std::vector<EdgeId>{1, 2, 3}));

  // {1,3,4,5,6} and {1,2,3,4,6} both reach 20/19 with five edges.
  const Instance cheap_g = gen_fig4(q(3, 4));
  const RootedSubtree cheap = min_max_subtree_exact(cheap_g);
  EXPECT_EQ(ids(cheap), (std::vector<EdgeId>{1, 2, 3, 4, 6}));
  EXPECT_EQ(cheap.density(), q(20, 19));
  EXPECT_EQ(density(cheap_g, std::vector<EdgeId>{1, 3, 4, 5, 6}), q(20, 19));

  const RootedSubtree red = min_max_subtree_exact(gen_fig7(q(1, 10)));
  EXPECT_EQ(ids(red), (std::vector<EdgeId>{1, 2, 3, 4}));
  EXPECT_EQ(red.density(), 1);

  try {
    min_max_subtree_exact(build_instance({{{0, 0}, {1, 0}}, {{1, 0, 1, q(1)}}, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoPrizeLeft);
  }
}

TEST(MinMaxExact, MatchesOracleAndHasOneRootBranch) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const std::int64_t n = 3 + static_cast<std::int64_t>(seed % 5);
    const std::int64_t m = std::min<std::int64_t>(n * (n - 1) / 2, n + static_cast<std::int64_t>(seed % 4));
    const Instance g = gen_random_graph(n, m, seed);
    if (g.total_prize() == 0) continue;
    const RootedSubtree t = min_max_subtree_exact(g);
    EXPECT_EQ(ids(t), oracle::min_max(g).edges) << "seed " << seed;
    std::size_t at_root = 0;
    for (EdgeId id : t.edges()) at_root += g.edge(id).u == g.root() || g.edge(id).v == g.root();
    EXPECT_EQ(at_root, 1u);
  }
}

TEST(DensityGreedyGraph, Fig7StartsWithRedTree) {
  for (const Rational eps : {q(1, 10), q(1, 5)}) {
    const Instance g = gen_fig7(eps);
    const GreedyResult r = density_greedy_graph(g);
    ASSERT_GE(r.solution.order.size(), 4u);
    EXPECT_EQ(r.solution.order[0], 1);
    EXPECT_EQ(std::set<EdgeId>(r.solution.order.begin(), r.solution.order.begin() + 4),
              (std::set<EdgeId>{1, 2, 3, 4}));
    const StepProfile p = alg_profile(g, r.solution);
    EXPECT_EQ(p.value_at(q(4) - q(1, 1000)), 0);
    EXPECT_EQ(p.value_at(q(4)), 2);
    EXPECT_EQ(p.value_at(q(5)), 4);
    EXPECT_EQ(p.value_at(q(6)), 6);
    EXPECT_EQ(p.value_at(6 + 2 * eps), 6 + eps);
  }
}

// The two tie rules differ, so only the sequence of block densities is compared.
TEST(DensityGreedyGraph, AgreesWithTreeGreedyOnTrees) {
  auto densities = [](const GreedyTrace& t) {
    std::vector<Rational> d;
    for (const auto& b : t.blocks) d.push_back(b.density());
    return d;
  };
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const Instance g = gen_random_tree(2 + seed % 11, seed);
    const GreedyResult graph = density_greedy_graph(g);
    const GreedyResult tree = density_greedy_tree(g);
    EXPECT_EQ(densities(graph.trace), densities(tree.trace)) << "seed " << seed;
    if (seed == 7) EXPECT_NE(graph.solution, tree.solution);
  }
}

TEST(DensityGreedyGraph, Fig8StartsWithA1) {
  const Instance g = gen_fig8(1);
  const GreedyResult r = density_greedy_graph(g);
  EXPECT_EQ(r.solution.order.front(), 1);
  EXPECT_EQ(density(g, std::vector<EdgeId>{1}), 1);
  EXPECT_EQ(density(g, std::vector<EdgeId>{2, 3, 4}), q(6, 7));
}

TEST(DensityGreedyGraph, ExtensionsDisjointConnectedAndDecreasing) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::int64_t n = 3 + static_cast<std::int64_t>(seed % 5);
    const std::int64_t m = std::min<std::int64_t>(n * (n - 1) / 2, n + static_cast<std::int64_t>(seed % 4));
    const Instance g = gen_random_graph(n, m, seed);
    const GreedyResult r = density_greedy_graph(g);
    EXPECT_TRUE(oracle::is_valid_prefix_order(g, r.solution.order));
    EXPECT_EQ(oracle::alg(g, r.solution.order, g.total_cost()), g.total_prize());
    std::set<EdgeId> used;
    for (const auto& b : r.trace.blocks) {
      for (EdgeId id : b.edges) EXPECT_TRUE(used.insert(id).second);
      EXPECT_EQ(make_forest(g, b.edges).components, 1u);
    }
    for (std::size_t i = 1; i < r.trace.blocks.size(); ++i)
      EXPECT_LE(r.trace.blocks[i].density(), r.trace.blocks[i - 1].density());
    EXPECT_TRUE(check_block_density_chain(g, r.solution, r.trace.blocks).ok) << "seed " << seed;
    const StepProfile p = alg_profile(g, r.solution);
    EXPECT_TRUE(check_first_block(p, r.trace.blocks, longest_root_path(g)).ok) << "seed " << seed;
  }
}

TEST(Postprocess, SwitchesOrMergesBlocks) {
  GreedyBlock low{{1}, q(1), q(1), 0};
  GreedyBlock high{{2}, q(4), q(2), 0};
  auto switched = postprocess_blocks({low, high});
  ASSERT_EQ(switched.size(), 2u);
  EXPECT_EQ(switched[0].density(), 2);
  EXPECT_EQ(switched[1].density(), 1);

  high.anchor = 3;
  auto merged = postprocess_blocks({low, high});
  ASSERT_EQ(merged.size(), 1u);
  EXPECT_EQ(merged[0].edges, (std::vector<EdgeId>{1, 2}));
  EXPECT_EQ(merged[0].density(), q(5, 3));

  GreedyBlock mid{{3}, q(3), q(2), 0};
  auto same = postprocess_blocks({high, mid, low});
  EXPECT_EQ(same.size(), 3u);
  EXPECT_EQ(same[0].edges, std::vector<EdgeId>{2});
}

TEST(Postprocess, LeavesGreedyOrderUnchanged) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance g = gen_random_graph(5, 7, seed);
    const GreedyResult r = density_greedy_graph(g);
    EXPECT_EQ(postprocess_density_order(g, r.trace), r.solution) << "seed " << seed;
  }
}

TEST(Postprocess, MergedOrderIsValid) {
  // Blocks given out of density order: the cheap leaf behind u comes first.
  const Instance g = gen_fig8(1);
  GreedyTrace trace;
  trace.blocks.push_back(GreedyBlock{{2, 3}, q(3), q(5), g.root()});
  trace.blocks.push_back(GreedyBlock{{4}, q(3), q(2), *g.find_vertex(2)});
  const IncrementalSolution pi = postprocess_density_order(g, trace);
  EXPECT_TRUE(oracle::is_valid_prefix_order(g, pi.order));
  EXPECT_EQ(std::set<EdgeId>(pi.order.begin(), pi.order.end()), (std::set<EdgeId>{2, 3, 4}));
  EXPECT_EQ(pi.order.front(), 2);
}
