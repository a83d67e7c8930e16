#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hscut/attack.hpp"

namespace hscut {

/// Mean of s(Q) over all T strikes of the trace. Throws on an empty trace.
///
/// Strikes are edge removals, so the average runs over the strikes actually
/// performed rather than over the node count.
double r_index(const AttackTrace& trace);

/// Mean of s(Q) over the first n strikes; requires 1 <= n <= trace length.
/// Lower means a more damaging attack.
double r_n_index(const AttackTrace& trace, std::size_t n);

/// Smallest Q >= 0 with s(Q) <= threshold, s(0) being the initial fraction.
std::optional<std::size_t> strikes_to_fraction(const AttackTrace& trace, double threshold);

/// Strikes needed, under `config`, before the graph first contains a bridge
/// (some edge with positive HS). 0 if it already has one; the edge count if
/// edges run out first. Throws on an edgeless graph.
std::size_t resilience_until_positive_hs(const Graph& graph, const StrategyConfig& config,
                                         std::uint64_t seed);

/// Random metric, sequential, seeded random ties.
StrategyConfig default_resilience_strategy();

struct RobustnessReport {
  double r_index = 0.0;
  std::map<std::size_t, double> r_n_table;
  std::map<double, std::optional<std::size_t>> strikes_to_threshold;
  std::string trace_ref;
};

/// Evaluates R, R_n for every n in `ns` that fits the trace (the trace length
/// is always included), and strikes_to_fraction for each threshold.
RobustnessReport score_trace(const AttackTrace& trace, const std::vector<std::size_t>& ns,
                             const std::vector<double>& thresholds, std::string trace_ref = {});

}  // namespace hscut
