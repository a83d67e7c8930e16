#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hscut/attack.hpp"
#include "hscut/generator.hpp"
#include "hscut/io.hpp"
#include "hscut/robustness.hpp"
#include "hscut/version.hpp"

namespace {

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw hscut::Error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw hscut::Error("failed writing " + path);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hscut::Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HS-cut network robustness toolkit"};
  app.set_version_flag("--version", std::string(hscut::kVersion));
  app.require_subcommand(1);

  // generate
  hscut::GeneratorParams gen;
  std::size_t gen_d_max = 0;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Write a scale-free edge list");
  generate->add_option("--alpha", gen.alpha, "Power-law exponent (> 1)")->capture_default_str();
  generate->add_option("--nodes", gen.num_nodes, "Node count before giant extraction")
      ->capture_default_str();
  generate->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
  generate->add_option("--d-min", gen.d_min, "Smallest requested degree")->capture_default_str();
  generate->add_option("--d-max", gen_d_max, "Largest requested degree (default nodes - 1)");
  generate->add_flag("--giant,!--no-giant", gen.extract_giant,
                     "Keep only the largest component (default on)");
  generate->add_option("--out", gen_out, "Output file (stdout if omitted)");

  // metrics
  std::string metrics_in, metrics_out;
  auto* metrics = app.add_subcommand("metrics", "Per-edge HS index and edge betweenness CSV");
  metrics->add_option("input", metrics_in, "Edge-list file")->required();
  metrics->add_option("--out", metrics_out, "Output file (stdout if omitted)");

  // attack
  std::string attack_in, attack_out;
  std::string strategy = "hs", mode = "sequential", tie = "random";
  std::size_t horizon = 0;
  std::uint64_t attack_seed = 1;
  auto* attack = app.add_subcommand("attack", "Run one attack and write its trace CSV");
  attack->add_option("input", attack_in, "Edge-list file")->required();
  attack->add_option("--strategy", strategy, "hs | betweenness | random")->capture_default_str();
  attack->add_option("--mode", mode, "sequential | simultaneous")->capture_default_str();
  attack->add_option("--tie", tie, "lowest | random")->capture_default_str();
  attack->add_option("--horizon", horizon, "Strike budget (default: every edge)");
  attack->add_option("--seed", attack_seed, "Tie-breaking seed")->capture_default_str();
  attack->add_option("--out", attack_out, "Output file (stdout if omitted)");

  // resilience
  std::string res_in;
  std::string res_strategy = "random", res_tie = "random";
  std::uint64_t res_seed = 1;
  auto* resilience =
      app.add_subcommand("resilience", "Strikes survived before the first bridge appears");
  resilience->add_option("input", res_in, "Edge-list file")->required();
  resilience->add_option("--strategy", res_strategy, "hs | betweenness | random")
      ->capture_default_str();
  resilience->add_option("--tie", res_tie, "lowest | random")->capture_default_str();
  resilience->add_option("--seed", res_seed, "Tie-breaking seed")->capture_default_str();

  // experiment
  std::string config_path;
  std::vector<double> exp_alphas;
  std::vector<std::string> exp_strategies;
  std::string exp_mode = "sequential", exp_tie = "random";
  std::size_t exp_nodes = 0, exp_runs = 0, exp_horizon = 0, exp_threads = 0;
  std::uint64_t exp_seed = 0;
  bool exp_giant = true;
  std::string exp_out;
  auto* experiment = app.add_subcommand("experiment", "Paired multi-run attack comparison");
  experiment->add_option("--config", config_path, "JSON experiment spec; flags override it");
  experiment->add_option("--alpha", exp_alphas, "Power-law exponents (repeatable)");
  experiment->add_option("--nodes", exp_nodes, "Nodes per generated network");
  experiment->add_option("--runs", exp_runs, "Networks per alpha");
  experiment->add_option("--seed", exp_seed, "Master seed");
  experiment->add_option("--strategy", exp_strategies, "hs | betweenness | random (repeatable)");
  experiment->add_option("--mode", exp_mode, "sequential | simultaneous")->capture_default_str();
  experiment->add_option("--tie", exp_tie, "lowest | random")->capture_default_str();
  experiment->add_option("--horizon", exp_horizon, "Strikes per attack");
  experiment->add_flag("--giant,!--no-giant", exp_giant, "Keep only the largest component");
  experiment->add_option("--threads", exp_threads, "Worker threads (0 = all cores)");
  experiment->add_option("--out", exp_out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*generate) {
      if (generate->count("--d-max") > 0) gen.d_max = gen_d_max;
      emit(gen_out, hscut::write_edge_list(hscut::generate_scale_free(gen)));
    } else if (*metrics) {
      emit(metrics_out, hscut::write_metrics_csv(hscut::read_edge_list_file(metrics_in)));
    } else if (*attack) {
      hscut::StrategyConfig config;
      config.metric = hscut::parse_metric(strategy);
      config.mode = hscut::parse_mode(mode);
      config.tie = hscut::parse_tie(tie);
      if (attack->count("--horizon") > 0) config.horizon = horizon;
      const auto graph = hscut::read_edge_list_file(attack_in);
      emit(attack_out, hscut::write_trace_csv(hscut::run_attack(graph, config, attack_seed)));
    } else if (*resilience) {
      hscut::StrategyConfig config = hscut::default_resilience_strategy();
      config.metric = hscut::parse_metric(res_strategy);
      config.tie = hscut::parse_tie(res_tie);
      const auto graph = hscut::read_edge_list_file(res_in);
      std::cout << hscut::resilience_until_positive_hs(graph, config, res_seed) << "\n";
    } else if (*experiment) {
      hscut::ExperimentSpec spec =
          config_path.empty() ? hscut::ExperimentSpec{} : hscut::parse_experiment_spec(slurp(config_path));
      if (!exp_alphas.empty()) spec.alphas = exp_alphas;
      if (experiment->count("--nodes") > 0) spec.num_nodes = exp_nodes;
      if (experiment->count("--runs") > 0) spec.runs_per_alpha = exp_runs;
      if (experiment->count("--seed") > 0) spec.master_seed = exp_seed;
      if (experiment->count("--horizon") > 0) spec.horizon = exp_horizon;
      if (experiment->count("--threads") > 0) spec.threads = exp_threads;
      if (experiment->count("--giant") + experiment->count("--no-giant") > 0) {
        spec.extract_giant = exp_giant;
      }
      if (!exp_strategies.empty() || experiment->count("--mode") > 0 ||
          experiment->count("--tie") > 0) {
        if (exp_strategies.empty()) exp_strategies = {"hs", "betweenness"};
        spec.strategies.clear();
        for (const auto& name : exp_strategies) {
          hscut::StrategyConfig c;
          c.metric = hscut::parse_metric(name);
          c.mode = hscut::parse_mode(exp_mode);
          c.tie = hscut::parse_tie(exp_tie);
          spec.strategies.push_back(c);
        }
      }
      spec.output_dir = exp_out;
      const auto report = hscut::run_experiment(spec);
      std::fprintf(stderr, "wrote %zu runs x %zu strategies to %s\n", report.runs.size(),
                   spec.strategies.size(), exp_out.c_str());
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "hscut: error: %s\n", e.what());
    return 1;
  }
  return 0;
}
