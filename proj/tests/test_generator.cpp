#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numeric>

#include "hscut/generator.hpp"

namespace hscut {
namespace {

GeneratorParams params(std::size_t n, double alpha, std::uint64_t seed = 7) {
  GeneratorParams p;
  p.num_nodes = n;
  p.alpha = alpha;
  p.seed = seed;
  return p;
}

TEST(PowerLawDegreesTest, RejectsTooFewNodes) {
  Rng rng(1);
  EXPECT_THROW(sample_power_law_degrees(params(1, 2.0), rng), Error);
  auto p = params(10, 2.0);
  p.d_min = 5;
  p.d_max = 3;
  EXPECT_THROW(sample_power_law_degrees(p, rng), Error);
  EXPECT_THROW(sample_power_law_degrees(params(10, 1.0), rng), Error);
}

TEST(PowerLawDegreesTest, SteepExponentGivesMinimumDegree) {
  Rng rng(7);
  auto p = params(1000, 50.0);
  const auto d = sample_power_law_degrees(p, rng);
  const auto ones = std::count(d.begin(), d.end(), 1u);
  // 1000 ones is even so no parity bump occurs.
  EXPECT_EQ(ones, 1000);
}

TEST(PowerLawDegreesTest, SumIsEvenAndWithinBounds) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    auto p = params(101, 2.1, seed);
    p.d_max = 20;
    const auto d = sample_power_law_degrees(p, rng);
    EXPECT_EQ(std::accumulate(d.begin(), d.end(), std::size_t{0}) % 2, 0u);
    for (auto x : d) {
      EXPECT_GE(x, 1u);
      EXPECT_LE(x, 20u);
    }
  }
}

TEST(PowerLawDegreesTest, ParityFixWhenAllAtMaximum) {
  Rng rng(3);
  auto p = params(5, 2.0);
  p.d_min = 3;
  p.d_max = 3;
  const auto d = sample_power_law_degrees(p, rng);
  EXPECT_EQ(std::accumulate(d.begin(), d.end(), std::size_t{0}) % 2, 0u);
}

TEST(ConfigurationModelTest, Pairs) {
  Rng rng(1);
  const Graph g = configuration_model({1, 1}, rng);
  ASSERT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(std::min(g.edge(0).u, g.edge(0).v), 0u);
  EXPECT_EQ(std::max(g.edge(0).u, g.edge(0).v), 1u);
}

TEST(ConfigurationModelTest, ErasureKeepsGraphSimple) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const Graph g = configuration_model({2, 2, 2}, rng);
    EXPECT_LE(g.num_edges(), 3u);
  }
  Rng rng(5);
  std::vector<std::size_t> degrees(200);
  for (std::size_t i = 0; i < degrees.size(); ++i) degrees[i] = 1 + (i * 7) % 30;
  if (std::accumulate(degrees.begin(), degrees.end(), std::size_t{0}) % 2) ++degrees[0];
  const Graph g = configuration_model(degrees, rng);
  for (NodeId v = 0; v < g.num_nodes(); ++v) EXPECT_LE(g.degree(v), degrees[v]);
}

TEST(ConfigurationModelTest, RejectsBadSequences) {
  Rng rng(1);
  EXPECT_THROW(configuration_model({1, 1, 1}, rng), Error);
  EXPECT_THROW(configuration_model({2, 0}, rng), Error);
}

TEST(GenerateScaleFreeTest, TwoNodesGiveK2) {
  const Graph g = generate_scale_free(params(2, 2.0));
  EXPECT_EQ(g.num_nodes(), 2u);
  EXPECT_EQ(g.num_edges(), 1u);
}

TEST(GenerateScaleFreeTest, DeterministicAndGiantConnected) {
  const Graph a = generate_scale_free(params(1000, 2.0, 7));
  const Graph b = generate_scale_free(params(1000, 2.0, 7));
  ASSERT_EQ(a.num_edges(), b.num_edges());
  for (EdgeId e = 0; e < a.num_edges(); ++e) {
    EXPECT_EQ(a.edge(e).u, b.edge(e).u);
    EXPECT_EQ(a.edge(e).v, b.edge(e).v);
  }
  EXPECT_EQ(connected_components(a).count(), 1u);
  const Graph c = generate_scale_free(params(1000, 2.0, 8));
  EXPECT_TRUE(c.num_edges() != a.num_edges() || c.num_nodes() != a.num_nodes() ||
              c.edge(0).u != a.edge(0).u || c.edge(0).v != a.edge(0).v);
}

TEST(GenerateScaleFreeTest, DegreeHistogramSlope) {
  auto p = params(100000, 2.0, 7);
  p.extract_giant = false;
  const Graph g = generate_scale_free(p);
  std::map<std::size_t, std::size_t> hist;
  for (NodeId v = 0; v < g.num_nodes(); ++v) ++hist[g.degree(v)];
  std::vector<double> xs, ys;
  for (std::size_t d = 2; d <= 50; ++d) {
    if (hist[d] == 0) continue;
    xs.push_back(std::log(static_cast<double>(d)));
    ys.push_back(std::log(static_cast<double>(hist[d])));
  }
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = sxy / sxx;
  EXPECT_GE(slope, -2.4);
  EXPECT_LE(slope, -1.6);
}

}  // namespace
}  // namespace hscut
