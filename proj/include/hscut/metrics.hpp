#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hscut/graph.hpp"
#include "hscut/random.hpp"

namespace hscut {

enum class MetricKind { HS, EdgeBetweenness, Random };

std::string_view to_string(MetricKind kind);

struct EdgeScore {
  EdgeId edge;
  double score;
  /// Largest component size after removing the edge; set for HS bridges only.
  std::optional<std::size_t> largest_after;
};

/// Scores for every alive edge of one graph state, ascending edge id.
struct MetricMap {
  MetricKind kind = MetricKind::HS;
  std::size_t total_nodes = 0;
  std::vector<EdgeScore> entries;

  bool empty() const { return entries.empty(); }
  std::size_t size() const { return entries.size(); }
  /// Throws Error if the edge has no entry.
  const EdgeScore& at(EdgeId e) const;
};

/// Chooses among equally maximal candidates.
class TiePolicy {
 public:
  enum class Kind { LowestEdgeId, SeededRandom };

  static TiePolicy lowest_edge_id() { return TiePolicy(Kind::LowestEdgeId, 0); }
  static TiePolicy seeded_random(std::uint64_t seed) {
    return TiePolicy(Kind::SeededRandom, seed);
  }

  Kind kind() const { return kind_; }
  Rng& rng() { return rng_; }

  /// Picks one of `candidates` (ascending edge ids, non-empty).
  EdgeId pick(const std::vector<EdgeId>& candidates);

 private:
  TiePolicy(Kind kind, std::uint64_t seed) : kind_(kind), rng_(seed) {}

  Kind kind_;
  Rng rng_;
};

/// HS index of every alive edge: N / L' - 1 for bridges, where L' is the
/// largest component after removing the edge and N the total node count;
/// 0 for edges whose removal leaves the component count unchanged.
MetricMap hs_index_all(const Graph& graph);

/// Unnormalized edge betweenness over unordered node pairs, unit lengths.
MetricMap edge_betweenness_all(const Graph& graph);

/// Equal zero score on every alive edge; selection reduces to the tie policy.
MetricMap uniform_scores(const Graph& graph);

MetricMap compute_metric(const Graph& graph, MetricKind kind);

inline constexpr double kBetweennessRelTol = 1e-9;

/// Edges attaining the maximum score, ascending id. HS maxima are decided on
/// the integer post-removal largest component; betweenness maxima within
/// kBetweennessRelTol relative to the maximum.
std::vector<EdgeId> maximal_edges(const MetricMap& metric);

/// Edge with the maximum score, ties broken by `policy`. Throws on empty map.
EdgeId select_target(const MetricMap& metric, TiePolicy& policy);

/// All entries ordered by descending score; equal scores (same rules as
/// maximal_edges) ordered by `policy`.
std::vector<EdgeId> rank_edges(const MetricMap& metric, TiePolicy& policy);

}  // namespace hscut
