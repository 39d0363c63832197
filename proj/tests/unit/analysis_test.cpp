#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "drunkcop/generators.hpp"
#include "drunkcop/hitting.hpp"
#include "drunkcop/monte_carlo.hpp"
#include "drunkcop/solvers.hpp"
#include "drunkcop/walks.hpp"
#include "oracles.hpp"

namespace drunkcop {
namespace {

SolverOptions tight() {
  SolverOptions o;
  o.tolerance = 1e-12;
  return o;
}

TEST(HittingTimes, HandValues) {
  EXPECT_NEAR(hitting_times(path(2), 0)[1], 1.0, 1e-12);
  const auto c4 = hitting_times(cycle(4), 0);
  EXPECT_NEAR(c4[0], 0.0, 1e-12);
  EXPECT_NEAR(c4[1], 3.0, 1e-10);
  EXPECT_NEAR(c4[3], 3.0, 1e-10);
  EXPECT_NEAR(c4[2], 4.0, 1e-10);
  const auto star = hitting_times(complete_bipartite(1, 5), 0);
  for (Vertex v = 1; v < 6; ++v) EXPECT_NEAR(star[v], 1.0, 1e-12);
  EXPECT_THROW(hitting_times(path(3), 3), std::out_of_range);
}

TEST(HittingTimes, MatchGaussSeidelOracle) {
  std::mt19937_64 gen(12);
  for (int round = 0; round < 15; ++round) {
    const Graph g = oracle::random_graph(gen, 2 + round, 0.2);
    const HittingTimeTable table(g);
    for (Vertex t = 0; t < g.order(); ++t) {
      const auto ref = oracle::hitting_times_gs(g, t);
      for (Vertex v = 0; v < g.order(); ++v) {
        ASSERT_NEAR(table(v, t), ref[v], 1e-8 * std::max(1.0, ref[v]));
      }
    }
  }
}

TEST(Walks, Examples) {
  const auto p0 = tstep_distribution(petersen(), 3, 0).prob;
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(p0[v], v == 3 ? 1.0 : 0.0);
  const auto p3 = tstep_distribution(path(3), 0, 2).prob;
  EXPECT_DOUBLE_EQ(p3[0], 0.5);
  EXPECT_DOUBLE_EQ(p3[1], 0.0);
  EXPECT_DOUBLE_EQ(p3[2], 0.5);
  const auto k2 = tstep_distribution(path(2), 0, 5).prob;
  EXPECT_EQ(k2[1], 1.0);
  EXPECT_THROW(tstep_distribution(path(3), 0, -1), std::invalid_argument);
  EXPECT_THROW(tstep_distribution(path(3), 5, 1), std::out_of_range);
}

TEST(Walks, SumToOneAndRespectSupport) {
  std::mt19937_64 gen(5);
  for (int round = 0; round < 20; ++round) {
    const Graph g = oracle::random_graph(gen, 2 + round % 10, 0.3);
    for (int t = 0; t <= 8; ++t) {
      const Vertex src = static_cast<Vertex>(gen() % g.order());
      const auto p = tstep_distribution(g, src, t).prob;
      const auto ref = oracle::walk_enumeration(g, src, t);
      double total = 0.0;
      for (Vertex v = 0; v < g.order(); ++v) {
        total += p[v];
        if (g.distance(src, v) > t) ASSERT_EQ(p[v], 0.0);
        ASSERT_NEAR(p[v], ref[v], 1e-12);
      }
      ASSERT_NEAR(total, 1.0, 1e-9);
    }
  }
}

TEST(ExactCapture, HandValues) {
  const auto lex = PolicySpec::parse("greedy:lex");
  EXPECT_NEAR(exact_expected_capture(cycle(4), lex, tight()).at(0, 2), 2.0, 1e-9);
  EXPECT_NEAR(exact_expected_capture(path(3), lex, tight()).at(0, 2), 1.0, 1e-12);
  EXPECT_NEAR(exact_expected_capture(complete_bipartite(10, 10), lex, tight()).at(0, 1), 10.0,
              0.5);
}

TEST(ExactCapture, Errors) {
  try {
    exact_expected_capture(path(4), PolicySpec::parse("smart"));
    FAIL();
  } catch (const SolverError& e) {
    EXPECT_EQ(e.kind(), SolverErrorKind::kNotMemoryless);
  }
  EXPECT_THROW(exact_expected_capture(path(4), PolicySpec::parse("greedy:history")), SolverError);
  try {
    exact_expected_capture(path(4), PolicySpec::parse("oscillate"));
    FAIL();
  } catch (const SolverError& e) {
    EXPECT_EQ(e.kind(), SolverErrorKind::kMissingAnchor);
  }
  SolverOptions few;
  few.max_sweeps = 2;
  try {
    exact_expected_capture(path(30), PolicySpec::parse("random"), few);
    FAIL();
  } catch (const SolverError& e) {
    EXPECT_EQ(e.kind(), SolverErrorKind::kNoConvergence);
    EXPECT_GT(e.residual(), 0.0);
  }
}

struct Case {
  const char* policy;
  oracle::Cop cop;
};

const Case kMemoryless[] = {{"greedy:lex", oracle::Cop::kGreedyLex},
                            {"greedy:random", oracle::Cop::kGreedyRandom},
                            {"random", oracle::Cop::kRandom},
                            {"oscillate", oracle::Cop::kOscillate},
                            {"hitting", oracle::Cop::kHitting}};

TEST(ExactCapture, MatchesDenseOracle) {
  std::mt19937_64 gen(21);
  for (int round = 0; round < 12; ++round) {
    const Graph g = oracle::random_graph(gen, 2 + round % 8, 0.25);
    for (const Case& c : kMemoryless) {
      const Vertex anchor = static_cast<Vertex>(gen() % g.order());
      SolverOptions opts = tight();
      opts.oscillate_anchor = anchor;
      const ValueTable t = exact_expected_capture(g, PolicySpec::parse(c.policy), opts);
      const auto ref = oracle::exact_values(g, c.cop, anchor);
      for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = 0; b < g.order(); ++b)
          ASSERT_NEAR(t.at(a, b), ref[a][b], 1e-7 * std::max(1.0, ref[a][b]))
              << c.policy << " n=" << g.order() << " at " << a << "," << b;
    }
  }
}

TEST(ExactCapture, AgreesWithMonteCarlo) {
  std::mt19937_64 gen(99);
  for (int round = 0; round < 3; ++round) {
    const Graph g = oracle::random_graph(gen, 6 + round * 2, 0.2);
    for (const Case& c : kMemoryless) {
      GameConfig cfg{0, static_cast<Vertex>(g.order() - 1)};
      SolverOptions opts = tight();
      opts.oscillate_anchor = cfg.cop_start;
      const double exact =
          exact_expected_capture(g, PolicySpec::parse(c.policy), opts).at(cfg.cop_start, cfg.drunk_start);
      const SimulationReport r =
          monte_carlo(g, PolicySpec::parse(c.policy), cfg, 20000, 100 + round, 2);
      EXPECT_LE(std::abs(r.mean - exact), 4 * r.std_error + 1e-12) << c.policy;
    }
  }
}

TEST(OptimalCapture, Examples) {
  EXPECT_NEAR(optimal_capture_values(path(2), tight()).at(0, 1), 1.0, 1e-12);
  EXPECT_GE(optimal_capture_values(projective_incidence(2), tight()).max_value(), 3.0 - 1e-9);
}

TEST(OptimalCapture, DominatesEveryMemorylessPolicy) {
  std::mt19937_64 gen(8);
  for (int round = 0; round < 10; ++round) {
    const Graph g = oracle::random_graph(gen, 3 + round, 0.2);
    const Vertex anchor = static_cast<Vertex>(gen() % g.order());
    for (bool idle : {false, true}) {
      SolverOptions opts = tight();
      opts.cop_may_idle = idle;
      opts.oscillate_anchor = anchor;
      const ValueTable best = optimal_capture_values(g, opts);
      for (const Case& c : kMemoryless) {
        const ValueTable t = exact_expected_capture(g, PolicySpec::parse(c.policy), opts);
        for (Vertex a = 0; a < g.order(); ++a)
          for (Vertex b = 0; b < g.order(); ++b)
            ASSERT_LE(best.at(a, b), t.at(a, b) + 1e-9) << c.policy;
      }
    }
  }
}

TEST(OptimalCapture, IdlingNeverHurts) {
  const Graph g = lollipop(20, 1.0);
  SolverOptions idle = tight();
  idle.cop_may_idle = true;
  const ValueTable with = optimal_capture_values(g, idle);
  const ValueTable without = optimal_capture_values(g, tight());
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = 0; b < g.order(); ++b) ASSERT_LE(with.at(a, b), without.at(a, b) + 1e-9);
}

}  // namespace
}  // namespace drunkcop
