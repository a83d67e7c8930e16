#include "hscut/attack.hpp"

#include <algorithm>

namespace hscut {

std::string_view to_string(AttackMode mode) {
  return mode == AttackMode::Sequential ? "sequential" : "simultaneous";
}

std::string StrategyConfig::name() const {
  std::string out(to_string(metric));
  out += '-';
  out += to_string(mode);
  out += tie == TiePolicy::Kind::SeededRandom ? "-random" : "-lowest";
  return out;
}

TiePolicy StrategyConfig::make_tie_policy(std::uint64_t seed) const {
  return tie == TiePolicy::Kind::SeededRandom ? TiePolicy::seeded_random(seed)
                                              : TiePolicy::lowest_edge_id();
}

double AttackTrace::lcc_fraction(std::size_t q) const {
  if (q == 0) return initial_lcc_fraction;
  if (q > strikes.size()) {
    throw Error("trace has " + std::to_string(strikes.size()) + " strikes, asked for " +
                std::to_string(q));
  }
  return strikes[q - 1].lcc_fraction;
}

namespace {

double lcc_fraction_of(const Graph& g) {
  if (g.num_nodes() == 0) return 0.0;
  return static_cast<double>(connected_components(g).largest_size) /
         static_cast<double>(g.num_nodes());
}

AttackTrace start_trace(const Graph& graph, const StrategyConfig& config, std::uint64_t seed) {
  AttackTrace trace;
  trace.initial_lcc_fraction = lcc_fraction_of(graph);
  trace.total_nodes = graph.num_nodes();
  trace.strategy = config;
  trace.seed = seed;
  return trace;
}

std::size_t strike_budget(const Graph& graph, const StrategyConfig& config) {
  const std::size_t alive = graph.num_alive_edges();
  return config.horizon ? std::min(*config.horizon, alive) : alive;
}

void strike(Graph& g, AttackTrace& trace, EdgeId e, double value) {
  g.remove_edge(e);
  trace.strikes.push_back(
      {trace.strikes.size() + 1, e, g.edge(e), value, lcc_fraction_of(g)});
}

}  // namespace

AttackTrace run_sequential_attack(const Graph& graph, const StrategyConfig& config,
                                  std::uint64_t seed) {
  if (config.mode != AttackMode::Sequential) {
    throw Error("run_sequential_attack: strategy mode is not sequential");
  }
  AttackTrace trace = start_trace(graph, config, seed);
  TiePolicy policy = config.make_tie_policy(seed);
  Graph g = graph;
  const std::size_t budget = strike_budget(graph, config);
  trace.strikes.reserve(budget);
  for (std::size_t q = 0; q < budget; ++q) {
    const MetricMap metric = compute_metric(g, config.metric);
    const EdgeId target = select_target(metric, policy);
    strike(g, trace, target, metric.at(target).score);
  }
  return trace;
}

AttackTrace run_simultaneous_attack(const Graph& graph, const StrategyConfig& config,
                                    std::uint64_t seed) {
  if (config.mode != AttackMode::Simultaneous) {
    throw Error("run_simultaneous_attack: strategy mode is not simultaneous");
  }
  AttackTrace trace = start_trace(graph, config, seed);
  TiePolicy policy = config.make_tie_policy(seed);
  Graph g = graph;
  const std::size_t budget = strike_budget(graph, config);
  if (budget == 0) return trace;
  const MetricMap metric = compute_metric(g, config.metric);
  const std::vector<EdgeId> order = rank_edges(metric, policy);
  trace.strikes.reserve(budget);
  for (std::size_t q = 0; q < budget; ++q) {
    strike(g, trace, order[q], metric.at(order[q]).score);
  }
  return trace;
}

AttackTrace run_attack(const Graph& graph, const StrategyConfig& config, std::uint64_t seed) {
  return config.mode == AttackMode::Sequential ? run_sequential_attack(graph, config, seed)
                                               : run_simultaneous_attack(graph, config, seed);
}

}  // namespace hscut
