#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hscut/graph.hpp"
#include "hscut/metrics.hpp"

namespace hscut {

enum class AttackMode { Sequential, Simultaneous };

std::string_view to_string(AttackMode mode);

struct StrategyConfig {
  MetricKind metric = MetricKind::HS;
  AttackMode mode = AttackMode::Sequential;
  TiePolicy::Kind tie = TiePolicy::Kind::SeededRandom;
  /// Strike budget; nullopt means every alive edge.
  std::optional<std::size_t> horizon;

  /// Stable label such as "hs-sequential-random".
  std::string name() const;
  TiePolicy make_tie_policy(std::uint64_t seed) const;
};

struct StrikeRecord {
  std::size_t index;  // Q, 1-based
  EdgeId edge;
  Edge endpoints;
  double metric_value;
  double lcc_fraction;  // s(Q)
};

struct AttackTrace {
  double initial_lcc_fraction = 0.0;  // s(0)
  std::vector<StrikeRecord> strikes;
  std::size_t total_nodes = 0;
  StrategyConfig strategy;
  std::uint64_t seed = 0;

  std::size_t size() const { return strikes.size(); }
  bool empty() const { return strikes.empty(); }
  /// s(Q) for Q in 0..size().
  double lcc_fraction(std::size_t q) const;
};

/// Recomputes the metric before every strike and removes its maximum.
AttackTrace run_sequential_attack(const Graph& graph, const StrategyConfig& config,
                                  std::uint64_t seed);

/// Ranks edges once on the input graph and removes them in that order.
AttackTrace run_simultaneous_attack(const Graph& graph, const StrategyConfig& config,
                                    std::uint64_t seed);

/// Dispatches on config.mode.
AttackTrace run_attack(const Graph& graph, const StrategyConfig& config, std::uint64_t seed);

}  // namespace hscut
