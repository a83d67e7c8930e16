#include "hscut/robustness.hpp"

namespace hscut {

double r_index(const AttackTrace& trace) {
  if (trace.empty()) throw Error("r_index: empty trace");
  return r_n_index(trace, trace.size());
}

double r_n_index(const AttackTrace& trace, std::size_t n) {
  if (n == 0 || n > trace.size()) {
    throw Error("r_n_index: n = " + std::to_string(n) + " outside 1.." +
                std::to_string(trace.size()));
  }
  double sum = 0.0;
  for (std::size_t q = 0; q < n; ++q) sum += trace.strikes[q].lcc_fraction;
  return sum / static_cast<double>(n);
}

std::optional<std::size_t> strikes_to_fraction(const AttackTrace& trace, double threshold) {
  for (std::size_t q = 0; q <= trace.size(); ++q) {
    if (trace.lcc_fraction(q) <= threshold) return q;
  }
  return std::nullopt;
}

StrategyConfig default_resilience_strategy() {
  StrategyConfig config;
  config.metric = MetricKind::Random;
  config.mode = AttackMode::Sequential;
  config.tie = TiePolicy::Kind::SeededRandom;
  return config;
}

std::size_t resilience_until_positive_hs(const Graph& graph, const StrategyConfig& config,
                                         std::uint64_t seed) {
  if (graph.num_alive_edges() == 0) {
    throw Error("resilience_until_positive_hs: graph has no edges");
  }
  Graph g = graph;
  TiePolicy policy = config.make_tie_policy(seed);
  std::size_t strikes = 0;
  std::vector<EdgeId> order;
  if (config.mode == AttackMode::Simultaneous) {
    order = rank_edges(compute_metric(g, config.metric), policy);
  }
  while (g.num_alive_edges() > 0) {
    if (!bridges(g).empty()) return strikes;
    const EdgeId target = config.mode == AttackMode::Simultaneous
                              ? order[strikes]
                              : select_target(compute_metric(g, config.metric), policy);
    g.remove_edge(target);
    ++strikes;
  }
  return strikes;
}

RobustnessReport score_trace(const AttackTrace& trace, const std::vector<std::size_t>& ns,
                             const std::vector<double>& thresholds, std::string trace_ref) {
  RobustnessReport report;
  report.trace_ref = std::move(trace_ref);
  if (!trace.empty()) {
    report.r_index = r_index(trace);
    report.r_n_table[trace.size()] = report.r_index;
    for (std::size_t n : ns) {
      if (n >= 1 && n <= trace.size()) report.r_n_table[n] = r_n_index(trace, n);
    }
  }
  for (double t : thresholds) report.strikes_to_threshold[t] = strikes_to_fraction(trace, t);
  return report;
}

}  // namespace hscut
