#include "hscut/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace hscut {

void GeneratorParams::validate() const {
  if (num_nodes < 2) throw Error("generator: num_nodes must be at least 2");
  if (!(alpha > 1.0)) throw Error("generator: alpha must be greater than 1");
  const std::size_t hi = effective_d_max();
  if (d_min < 1 || d_min > hi || hi > num_nodes - 1) {
    throw Error("generator: need 1 <= d_min <= d_max <= num_nodes - 1 (got d_min=" +
                std::to_string(d_min) + ", d_max=" + std::to_string(hi) + ")");
  }
}

std::vector<std::size_t> sample_power_law_degrees(const GeneratorParams& params, Rng& rng) {
  params.validate();
  const std::size_t lo = params.d_min;
  const std::size_t hi = params.effective_d_max();

  std::vector<double> cdf(hi - lo + 1);
  double total = 0.0;
  for (std::size_t d = lo; d <= hi; ++d) {
    total += std::pow(static_cast<double>(d), -params.alpha);
    cdf[d - lo] = total;
  }
  for (double& c : cdf) c /= total;
  cdf.back() = 1.0;

  std::vector<std::size_t> degrees(params.num_nodes);
  for (auto& d : degrees) {
    const double u = uniform_unit(rng);
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    d = lo + static_cast<std::size_t>(it - cdf.begin());
  }

  if (std::accumulate(degrees.begin(), degrees.end(), std::size_t{0}) % 2 == 1) {
    const std::size_t n = degrees.size();
    const auto start = static_cast<std::size_t>(uniform_index(rng, n));
    bool bumped = false;
    for (std::size_t k = 0; k < n && !bumped; ++k) {
      auto& d = degrees[(start + k) % n];
      if (d < hi) {
        ++d;
        bumped = true;
      }
    }
    // Every entry sits at d_max (odd d_max, odd n): lower one instead.
    if (!bumped) --degrees[start];
  }
  return degrees;
}

Graph configuration_model(const std::vector<std::size_t>& degrees, Rng& rng) {
  const std::size_t n = degrees.size();
  std::size_t sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (degrees[i] > (n == 0 ? 0 : n - 1)) {
      throw Error("configuration_model: degree " + std::to_string(degrees[i]) + " of node " +
                  std::to_string(i) + " exceeds num_nodes - 1");
    }
    sum += degrees[i];
  }
  if (sum % 2 != 0) throw Error("configuration_model: degree sum is odd");

  std::vector<NodeId> stubs;
  stubs.reserve(sum);
  for (std::size_t i = 0; i < n; ++i) stubs.insert(stubs.end(), degrees[i], static_cast<NodeId>(i));
  shuffle(stubs, rng);

  std::vector<Edge> edges;
  edges.reserve(sum / 2);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(sum);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    NodeId a = stubs[i], b = stubs[i + 1];
    if (a == b) continue;
    const std::uint64_t key = (static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b);
    if (!seen.insert(key).second) continue;
    edges.push_back({a, b});
  }
  return Graph(n, edges);
}

Graph largest_component_subgraph(const Graph& graph) {
  const ComponentView view = connected_components(graph);
  if (view.count() <= 1) return graph;
  const auto giant = static_cast<std::uint32_t>(
      std::max_element(view.sizes.begin(), view.sizes.end()) - view.sizes.begin());

  constexpr auto kDropped = static_cast<NodeId>(-1);
  std::vector<NodeId> relabel(graph.num_nodes(), kDropped);
  NodeId next = 0;
  for (NodeId v = 0; v < graph.num_nodes(); ++v) {
    if (view.component_id[v] == giant) relabel[v] = next++;
  }
  std::vector<Edge> edges;
  for (EdgeId e : graph.alive_edges()) {
    const Edge& ed = graph.edge(e);
    if (relabel[ed.u] != kDropped) edges.push_back({relabel[ed.u], relabel[ed.v]});
  }
  return Graph(next, edges);
}

Graph generate_scale_free(const GeneratorParams& params) {
  Rng rng(params.seed);
  const auto degrees = sample_power_law_degrees(params, rng);
  Graph g = configuration_model(degrees, rng);
  return params.extract_giant ? largest_component_subgraph(g) : g;
}

}  // namespace hscut
