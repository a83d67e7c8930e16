#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hscut/graph.hpp"
#include "hscut/random.hpp"

namespace hscut {

struct GeneratorParams {
  std::size_t num_nodes = 1000;
  double alpha = 2.0;
  std::size_t d_min = 1;
  std::optional<std::size_t> d_max;  // defaults to num_nodes - 1
  bool extract_giant = true;
  std::uint64_t seed = 0;

  std::size_t effective_d_max() const { return d_max.value_or(num_nodes - 1); }
  /// Throws Error unless num_nodes >= 2, alpha > 1 and 1 <= d_min <= d_max <= num_nodes - 1.
  void validate() const;
};

/// num_nodes i.i.d. draws from P(d) ∝ d^-alpha on [d_min, d_max], with the
/// sum made even by bumping one entry.
std::vector<std::size_t> sample_power_law_degrees(const GeneratorParams& params, Rng& rng);

/// Erased configuration model: shuffle stubs, pair them, drop self-loops and
/// repeated pairs.
Graph configuration_model(const std::vector<std::size_t>& degrees, Rng& rng);

/// Subgraph induced by the largest component (lowest-labelled on ties),
/// nodes relabelled densely in original order.
Graph largest_component_subgraph(const Graph& graph);

Graph generate_scale_free(const GeneratorParams& params);

}  // namespace hscut
