#include <gtest/gtest.h>

#include "ipcst/ipcst.hpp"
#include "test_support.hpp"

using namespace ipcst;
using oracle::q;

namespace {

ExtRational from_oracle(const std::optional<Rational>& v) { return v ? ExtRational(*v) : ExtRational::infinity(); }

}  // namespace

TEST(AlgProfile, Examples) {
  const Rational eps = q(1, 10);
  const Instance f5 = gen_fig5(eps);
  const StepProfile p5 = alg_profile(f5, density_greedy_tree(f5).solution);
  EXPECT_EQ(p5.breakpoints, (std::vector<Breakpoint>{{q(0), q(0)}, {q(1), q(2)}, {1 + eps, 2 + eps}}));

  EXPECT_EQ(alg_profile(f5, {}).breakpoints, (std::vector<Breakpoint>{{q(0), q(0)}}));

  const Instance f7 = gen_fig7(eps);
  const StepProfile p7 = alg_profile(f7, density_greedy_graph(f7).solution);
  EXPECT_EQ(p7.breakpoints, (std::vector<Breakpoint>{{q(0), q(0)},
                                                     {q(3), q(0)},
                                                     {q(4), q(2)},
                                                     {q(5), q(4)},
                                                     {q(6), q(6)},
                                                     {6 + 2 * eps, 6 + eps}}));
}

TEST(AlgProfile, RejectsInvalidOrderings) {
  const Instance g = gen_fig8(1);
  for (const std::vector<EdgeId>& bad : {std::vector<EdgeId>{3}, {1, 1}, {2, 4, 1}, {99}}) {
    try {
      alg_profile(g, {bad});
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidOrdering);
    }
  }
  EXPECT_THROW(verify_competitive(g, {{1}}, q(0), q(1)), Error);
}

TEST(AlgProfile, NondecreasingAndMatchesPrefixOracle) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance g = oracle::small_random_graph(seed);
    const auto pi = density_greedy_graph(g).solution;
    const StepProfile p = alg_profile(g, pi);
    for (std::size_t i = 1; i < p.breakpoints.size(); ++i) {
      EXPECT_LT(p.breakpoints[i - 1].budget, p.breakpoints[i].budget);
      EXPECT_LE(p.breakpoints[i - 1].prize, p.breakpoints[i].prize);
    }
    for (const auto& bp : p.breakpoints) EXPECT_EQ(bp.prize, oracle::alg(g, pi.order, bp.budget));
  }
}

TEST(VerifyCompetitive, Fig5) {
  const Rational eps = q(1, 10);
  const Instance g = gen_fig5(eps);
  const auto pi = density_greedy_tree(g).solution;
  EXPECT_TRUE(verify_competitive(g, pi, q(1), q(1)).holds);

  // With alpha + eps < 1 the light prize is unreachable at budget eps + alpha.
  const Rational alpha = 1 - 3 * eps / 2;
  const CompetitiveReport bad = verify_competitive(g, pi, alpha, q(1000000));
  ASSERT_FALSE(bad.holds);
  EXPECT_EQ(bad.witness->budget, eps);
  EXPECT_EQ(bad.witness->opt, eps);
  EXPECT_EQ(bad.witness->alg, 0);

  // At alpha = 1 - eps/2 the heavy edge fits within eps + alpha.
  EXPECT_TRUE(verify_competitive(g, pi, 1 - eps / 2, q(1)).holds);
}

TEST(VerifyCompetitive, LargeSlackAlwaysHolds) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance g = oracle::small_random_graph(seed);
    EXPECT_TRUE(verify_competitive(g, capacity_scaling(g).solution, g.total_cost(), q(1)).holds);
  }
}

TEST(VerifyCompetitive, MonotoneInAlphaAndMu) {
  const std::vector<Rational> alphas = {q(0), q(1, 4), q(1), q(2), q(4)};
  const std::vector<Rational> mus = {q(1), q(5, 4), q(2), q(4)};
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Instance g = oracle::small_random_graph(seed);
    const auto pi = density_greedy_graph(g).solution;
    for (std::size_t a = 0; a < alphas.size(); ++a)
      for (std::size_t m = 0; m < mus.size(); ++m) {
        if (!verify_competitive(g, pi, alphas[a], mus[m]).holds) continue;
        for (std::size_t a2 = a; a2 < alphas.size(); ++a2)
          for (std::size_t m2 = m; m2 < mus.size(); ++m2)
            EXPECT_TRUE(verify_competitive(g, pi, alphas[a2], mus[m2]).holds);
      }
  }
}

TEST(MinMu, Examples) {
  const Rational eps = q(1, 10);
  const Instance f5 = gen_fig5(eps);
  const auto pi5 = density_greedy_tree(f5).solution;
  EXPECT_EQ(min_alpha(f5, pi5, q(1)), ExtRational(1 - eps));
  EXPECT_EQ(min_mu(f5, pi5, q(1)), ExtRational(q(1)));
  EXPECT_TRUE(min_mu(f5, pi5, 1 - 3 * eps / 2).is_infinite());

  // On a path the ALG profile equals the frontier.
  const Instance path = build_instance({{{0, 0}, {1, 1}, {2, 4}}, {{1, 0, 1, q(1)}, {2, 1, 2, q(1)}}, 0});
  EXPECT_EQ(min_mu(path, {{1, 2}}, q(0)), ExtRational(q(1)));

  const Instance f7 = gen_fig7(eps);
  EXPECT_TRUE(min_mu(f7, density_greedy_graph(f7).solution, eccentricity(f7)).is_infinite());
}

TEST(MinMu, MatchesOracleAndIsTight) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance g = oracle::small_random_graph(seed);
    const auto trees = oracle::all_rooted_trees(g);
    const auto pi = density_greedy_graph(g).solution;
    for (const Rational alpha : {q(0), q(1, 2), q(2)}) {
      const ExtRational m = min_mu(g, pi, alpha);
      EXPECT_EQ(m, from_oracle(oracle::min_mu(g, trees, pi.order, alpha))) << "seed " << seed;
      if (!m.is_infinite()) {
        EXPECT_TRUE(verify_competitive(g, pi, alpha, m.value()).holds);
        if (m.value() > 1) EXPECT_FALSE(verify_competitive(g, pi, alpha, m.value() - q(1, 1000000)).holds);
      }
    }
    const ExtRational a = min_alpha(g, pi, q(1));
    ASSERT_FALSE(a.is_infinite());
    EXPECT_TRUE(verify_competitive(g, pi, a.value(), q(1)).holds);
    if (a.value() > 0) EXPECT_FALSE(verify_competitive(g, pi, a.value() - q(1, 1000000), q(1)).holds);
  }
}

TEST(BestOrdering, Examples) {
  const BestOrdering f1 = best_incremental_ordering(gen_fig1(q(1), q(1, 100)), q(0));
  EXPECT_EQ(f1.mu, ExtRational(q(100)));
  const BestOrdering f1b = best_incremental_ordering(gen_fig1(q(1), q(1, 1000)), q(0));
  EXPECT_EQ(f1b.mu, ExtRational(q(1000)));

  const BestOrdering single = best_incremental_ordering(build_instance({{{0, 0}, {1, 1}}, {{1, 0, 1, q(1)}}, 0}), q(0));
  EXPECT_EQ(single.mu, ExtRational(q(1)));
  EXPECT_EQ(single.solution.order, std::vector<EdgeId>{1});
}

TEST(BestOrdering, MatchesPermutationSearch) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance g = gen_random_graph(3 + seed % 3, 2 + seed % 3 + (seed % 2), seed);
    for (const Rational alpha : {q(0), q(1, 2), q(3, 2)}) {
      const BestOrdering best = best_incremental_ordering(g, alpha);
      EXPECT_EQ(best.mu, from_oracle(oracle::best_mu(g, alpha))) << "seed " << seed;
      EXPECT_EQ(min_mu(g, best.solution, alpha), best.mu) << "seed " << seed;
    }
  }
  for (std::int64_t n : {1, 2}) {
    const Instance g = gen_fig8(n);
    const BestOrdering best = best_incremental_ordering(g, q(8));
    EXPECT_EQ(best.mu, from_oracle(oracle::best_mu(g, q(8))));
    EXPECT_EQ(min_mu(g, best.solution, q(8)), best.mu);
  }
}

TEST(ForestExtraction, Examples) {
  const Instance t = gen_random_tree(9, 5);
  const auto k1 = forest_extraction(t, t.root(), q(1, 2), 1);
  ASSERT_TRUE(k1.has_value());
  EXPECT_LE(k1->components, 1u);
  const auto full = forest_extraction(t, t.root(), q(1), 3);
  ASSERT_TRUE(full.has_value());
  EXPECT_EQ(full->prize, t.total_prize());

  const Instance eight = gen_random_tree(9, 11);
  ASSERT_EQ(eight.edge_count(), 8u);
  const auto f = forest_extraction(eight, eight.root(), q(1, 2), 3);
  ASSERT_TRUE(f.has_value());
  EXPECT_GE(f->prize, q(3, 4) * q(1, 2) * eight.total_prize());
  EXPECT_LE(f->cost, q(1, 2) * eight.total_cost());
  EXPECT_LE(f->components, 3u);

  // A second component may be a lone vertex at no cost.
  const Instance edge = build_instance({{{0, 0}, {1, 1}}, {{1, 0, 1, q(7, 4)}}, 0});
  const auto lone = forest_extraction(edge, edge.root(), q(1, 3), 2);
  ASSERT_TRUE(lone.has_value());
  EXPECT_TRUE(lone->edges.empty());
  EXPECT_EQ(lone->components, 2u);
  EXPECT_EQ(lone->prize, 1);
  EXPECT_EQ(lone->cost, 0);

  EXPECT_THROW(forest_extraction(eight, eight.root(), q(3, 2), 2), Error);
  EXPECT_THROW(forest_extraction(eight, eight.root(), q(1, 2), 0), Error);
  try {
    forest_extraction(gen_random_tree(20, 1), 0, q(1, 2), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TreeTooLarge);
  }
}

TEST(ForestExtraction, ComponentsAnchoredAndWithinBudget) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance t = gen_random_tree(2 + seed % 9, seed);
    for (const Rational lambda : {q(0), q(1, 3), q(2, 3), q(1)})
      for (std::size_t k = 1; k <= 3; ++k) {
        const auto f = forest_extraction(t, t.root(), lambda, k);
        ASSERT_TRUE(f.has_value()) << "seed " << seed;
        EXPECT_LE(f->cost, lambda * t.total_cost());
        EXPECT_LE(f->components, k);
        EXPECT_EQ(f->components, make_forest(t, f->edges, f->vertices).components);
        EXPECT_TRUE(std::binary_search(f->vertices.begin(), f->vertices.end(), t.root()));
      }
  }
}

TEST(Checks, OptScalingDetectsViolation) {
  // OPT(5 + 1) = 0 but OPT(2 * 5) = 100.
  ParetoFrontier f;
  f.points = {{q(0), q(0)}, {q(10), q(100)}};
  EXPECT_FALSE(check_opt_scaling(f, q(1), q(2), 1).ok);
  EXPECT_TRUE(check_opt_scaling(f, q(1), q(1), 1).ok);
  EXPECT_TRUE(check_opt_scaling(pareto_frontier(gen_fig8(1)), q(5), q(2), 1).ok);
}
