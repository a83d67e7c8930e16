#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hscut/attack.hpp"
#include "hscut/generator.hpp"
#include "hscut/graph.hpp"

namespace hscut {

// Edge lists: one "u v" pair per line, '#' comments and blank lines skipped.

/// Throws Error with a 1-based line number on malformed lines, self-loops and
/// duplicate edges. num_nodes is the largest id + 1.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::filesystem::path& path);
std::string write_edge_list(const Graph& graph);

/// "%.9g" formatting shared by every CSV writer.
std::string format_real(double value);

/// Comment line "# s0=... seed=... strategy=...", the header
/// "strike,edge_u,edge_v,metric_value,lcc_fraction", then one row per strike.
std::string write_trace_csv(const AttackTrace& trace);

/// Per-edge HS index, post-removal largest component and betweenness.
std::string write_metrics_csv(const Graph& graph);

/// Names accepted by the CLI and experiment configs.
MetricKind parse_metric(const std::string& name);
AttackMode parse_mode(const std::string& name);
TiePolicy::Kind parse_tie(const std::string& name);

struct ExperimentSpec {
  std::vector<double> alphas{1.90, 2.00, 2.05, 2.10, 2.20};
  std::size_t num_nodes = 1000;
  std::size_t runs_per_alpha = 50;
  std::vector<StrategyConfig> strategies = default_strategies();
  std::size_t horizon = 500;
  std::uint64_t master_seed = 1;
  std::size_t d_min = 1;
  bool extract_giant = true;
  /// Where trace files, edge lists and the summary go; nothing is written when unset.
  std::optional<std::filesystem::path> output_dir;
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t threads = 0;

  /// Sequential HS-cut and edge-betweenness attacks with random tie-breaking.
  static std::vector<StrategyConfig> default_strategies();
  void validate() const;
};

/// Reads an experiment spec from JSON; absent keys keep their defaults.
ExperimentSpec parse_experiment_spec(std::string_view json_text);

/// Seed for run `run` of the alpha at position `alpha_index`.
std::uint64_t derive_run_seed(std::uint64_t master_seed, std::size_t alpha_index,
                              std::size_t run);

struct RunRecord {
  std::size_t alpha_index = 0;
  std::size_t run = 0;
  std::uint64_t seed = 0;
  std::size_t num_nodes = 0;
  std::size_t num_edges = 0;
  std::vector<AttackTrace> traces;  // parallel to spec.strategies
};

struct CurveSummary {
  std::size_t alpha_index = 0;
  std::size_t strategy_index = 0;
  std::vector<double> mean_s;    // Q = 1..horizon
  std::vector<double> median_s;
  std::size_t padded_runs = 0;   // runs that ran out of edges before the horizon
  std::optional<double> median_strikes_to_075;
  std::optional<double> median_strikes_to_050;
  std::optional<double> median_strikes_to_025;
};

struct ExperimentReport {
  ExperimentSpec spec;
  std::vector<RunRecord> runs;      // ordered by (alpha_index, run)
  std::vector<CurveSummary> curves;  // ordered by (alpha_index, strategy_index)

  const RunRecord& run(std::size_t alpha_index, std::size_t run) const;
  const CurveSummary& curve(std::size_t alpha_index, std::size_t strategy_index) const;
};

/// Generates one graph per (alpha, run), attacks it with every strategy, and
/// aggregates. Writes traces, edge lists, summary.csv and experiment.json
/// when spec.output_dir is set.
ExperimentReport run_experiment(const ExperimentSpec& spec);

/// Summary rows then curve rows, ordered by alpha, strategy name, run, Q.
std::string write_report_csv(const ExperimentReport& report);

/// File name stem shared by trace files and edge lists.
std::string run_file_stem(double alpha, std::size_t run);

}  // namespace hscut
