#include <gtest/gtest.h>

#include <random>

#include "hscut/robustness.hpp"
#include "oracles.hpp"

namespace hscut {
namespace {

AttackTrace trace_of(double s0, std::vector<double> s) {
  AttackTrace t;
  t.initial_lcc_fraction = s0;
  t.total_nodes = 10;
  for (std::size_t q = 0; q < s.size(); ++q) {
    t.strikes.push_back({q + 1, static_cast<EdgeId>(q), {0, 1}, 0.0, s[q]});
  }
  return t;
}

TEST(RIndexTest, Values) {
  EXPECT_DOUBLE_EQ(r_index(trace_of(1.0, {2.0 / 3.0, 1.0 / 3.0})), 0.5);
  EXPECT_EQ(r_index(trace_of(1.0, {1.0, 1.0, 1.0})), 1.0);
  EXPECT_THROW(r_index(trace_of(1.0, {})), Error);
}

TEST(RnIndexTest, Values) {
  const auto t = trace_of(1.0, {2.0 / 3.0, 1.0 / 3.0});
  EXPECT_DOUBLE_EQ(r_n_index(t, 1), 2.0 / 3.0);
  EXPECT_EQ(r_n_index(t, 2), r_index(t));
  EXPECT_THROW(r_n_index(t, 0), Error);
  EXPECT_THROW(r_n_index(t, 3), Error);
}

TEST(RnIndexTest, PointwiseDominance) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (int i = 0; i < 200; ++i) {
    const std::size_t len = 1 + rng() % 30;
    std::vector<double> a(len), b(len);
    for (std::size_t q = 0; q < len; ++q) {
      b[q] = u(rng);
      a[q] = std::min(1.0, b[q] + u(rng) * 0.1);
    }
    const auto ta = trace_of(1.0, a), tb = trace_of(1.0, b);
    for (std::size_t n = 1; n <= len; ++n) EXPECT_GE(r_n_index(ta, n), r_n_index(tb, n));
  }
}

TEST(StrikesToFractionTest, Values) {
  const auto t = trace_of(1.0, {1.0, 0.7, 0.4});
  EXPECT_EQ(strikes_to_fraction(t, 0.75), 2u);
  EXPECT_EQ(strikes_to_fraction(t, 1.0), 0u);
  EXPECT_FALSE(strikes_to_fraction(trace_of(1.0, {0.9, 0.5, 0.3}), 0.1));
  EXPECT_EQ(strikes_to_fraction(trace_of(0.6, {0.6}), 0.75), 0u);
}

TEST(StrikesToFractionTest, MonotoneInThreshold) {
  std::mt19937_64 rng(62);
  for (int i = 0; i < 100; ++i) {
    std::vector<double> s;
    double cur = 1.0;
    for (int q = 0; q < 20; ++q) s.push_back(cur *= 0.8 + 0.2 * (rng() % 100) / 100.0);
    const auto t = trace_of(1.0, s);
    std::optional<std::size_t> prev = 0;
    for (double th = 1.0; th > 0.0; th -= 0.05) {
      const auto cur_q = strikes_to_fraction(t, th);
      if (!prev) {
        EXPECT_FALSE(cur_q);
      } else if (cur_q) {
        EXPECT_GE(*cur_q, *prev);
      }
      prev = cur_q;
    }
  }
}

StrategyConfig lowest_random_metric() {
  StrategyConfig c = default_resilience_strategy();
  c.tie = TiePolicy::Kind::LowestEdgeId;
  return c;
}

TEST(ResilienceTest, KnownGraphs) {
  const auto cfg = default_resilience_strategy();
  EXPECT_EQ(resilience_until_positive_hs(build_graph(3, {{{0, 1}, {1, 2}}}), cfg, 1), 0u);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_EQ(resilience_until_positive_hs(build_graph(4, {{{0, 1}, {1, 2}, {2, 3}, {3, 0}}}),
                                           cfg, seed),
              1u);
  }
  const Graph k4 = build_graph(4, {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}});
  EXPECT_EQ(resilience_until_positive_hs(k4, lowest_random_metric(), 0), 2u);
  EXPECT_THROW(resilience_until_positive_hs(build_graph(3, {}), cfg, 0), Error);
}

TEST(ResilienceTest, ZeroIffBridgePresent) {
  std::mt19937_64 rng(63);
  for (int i = 0; i < 200; ++i) {
    const auto eg = oracle::random_graph(rng, 12);
    if (eg.edges.empty()) continue;
    const Graph g = build_graph(eg.n, eg.edges);
    const bool has_bridge = !oracle::bridges_by_removal(eg.n, eg.edges).empty();
    EXPECT_EQ(resilience_until_positive_hs(g, default_resilience_strategy(), i) == 0, has_bridge);
  }
}

TEST(ScoreTraceTest, TableIncludesTraceLength) {
  const auto t = trace_of(1.0, {1.0, 0.5, 0.25});
  const auto r = score_trace(t, {1, 2, 10}, {0.75, 0.1}, "t");
  EXPECT_EQ(r.r_n_table.at(3), r.r_index);
  EXPECT_FALSE(r.r_n_table.contains(10));
  EXPECT_EQ(r.strikes_to_threshold.at(0.75), 2u);
  EXPECT_FALSE(r.strikes_to_threshold.at(0.1));
}

}  // namespace
}  // namespace hscut
