#include "hscut/io.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "hscut/robustness.hpp"

namespace hscut {
namespace {

constexpr std::size_t kSummaryWindows[] = {50, 100};
constexpr double kSummaryThresholds[] = {0.75, 0.50, 0.25};

Error line_error(std::size_t line, const std::string& what) {
  return Error("line " + std::to_string(line) + ": " + what);
}

bool parse_node(std::string_view token, NodeId& out) {
  if (token.empty()) return false;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw Error("failed writing " + path.string());
}

std::string format_alpha(double alpha) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", alpha);
  return buf;
}

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

// Absent counts sort last; the median is absent once it falls on one.
std::optional<double> median_count(const std::vector<std::optional<std::size_t>>& counts) {
  constexpr double kNever = std::numeric_limits<double>::infinity();
  std::vector<double> values;
  values.reserve(counts.size());
  for (const auto& c : counts) values.push_back(c ? static_cast<double>(*c) : kNever);
  if (values.empty()) return std::nullopt;
  const double m = median_of(std::move(values));
  if (m == kNever) return std::nullopt;
  return m;
}

std::string optional_count(const std::optional<std::size_t>& c) {
  return c ? std::to_string(*c) : std::string();
}

nlohmann::json strategy_to_json(const StrategyConfig& s) {
  return {{"name", s.name()},
          {"metric", std::string(to_string(s.metric))},
          {"mode", std::string(to_string(s.mode))},
          {"tie", s.tie == TiePolicy::Kind::SeededRandom ? "random" : "lowest"}};
}

}  // namespace

MetricKind parse_metric(const std::string& s) {
  if (s == "hs") return MetricKind::HS;
  if (s == "betweenness") return MetricKind::EdgeBetweenness;
  if (s == "random") return MetricKind::Random;
  throw Error("unknown metric '" + s + "' (expected hs, betweenness or random)");
}

AttackMode parse_mode(const std::string& s) {
  if (s == "sequential") return AttackMode::Sequential;
  if (s == "simultaneous") return AttackMode::Simultaneous;
  throw Error("unknown mode '" + s + "' (expected sequential or simultaneous)");
}

TiePolicy::Kind parse_tie(const std::string& s) {
  if (s == "random") return TiePolicy::Kind::SeededRandom;
  if (s == "lowest") return TiePolicy::Kind::LowestEdgeId;
  throw Error("unknown tie policy '" + s + "' (expected lowest or random)");
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  NodeId max_id = 0;
  bool any = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    const std::size_t sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos) throw line_error(line_no, "expected two node ids");
    NodeId u = 0, v = 0;
    if (!parse_node(line.substr(0, sep), u) || !parse_node(line.substr(sep + 1), v)) {
      throw line_error(line_no, "malformed edge '" + std::string(line) + "'");
    }
    if (u == v) throw line_error(line_no, "self-loop on node " + std::to_string(u));
    const std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
    if (!seen.insert(key).second) {
      throw line_error(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    edges.push_back({u, v});
    max_id = std::max({max_id, u, v});
    any = true;
  }
  return Graph(any ? static_cast<std::size_t>(max_id) + 1 : 0, edges);
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_edge_list(buf.str());
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

std::string write_edge_list(const Graph& graph) {
  std::string out = "# nodes=" + std::to_string(graph.num_nodes()) +
                    " edges=" + std::to_string(graph.num_alive_edges()) + "\n";
  for (EdgeId e : graph.alive_edges()) {
    const Edge& ed = graph.edge(e);
    out += std::to_string(ed.u) + ' ' + std::to_string(ed.v) + '\n';
  }
  return out;
}

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

std::string write_trace_csv(const AttackTrace& trace) {
  std::string out = "# s0=" + format_real(trace.initial_lcc_fraction) +
                    " seed=" + std::to_string(trace.seed) +
                    " strategy=" + trace.strategy.name() + "\n";
  out += "strike,edge_u,edge_v,metric_value,lcc_fraction\n";
  for (const auto& s : trace.strikes) {
    out += std::to_string(s.index) + ',' + std::to_string(s.endpoints.u) + ',' +
           std::to_string(s.endpoints.v) + ',' + format_real(s.metric_value) + ',' +
           format_real(s.lcc_fraction) + '\n';
  }
  return out;
}

std::string write_metrics_csv(const Graph& graph) {
  const MetricMap hs = hs_index_all(graph);
  const MetricMap bc = edge_betweenness_all(graph);
  std::string out = "edge_id,edge_u,edge_v,hs_index,largest_after,betweenness\n";
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const EdgeScore& h = hs.entries[i];
    const Edge& ed = graph.edge(h.edge);
    out += std::to_string(h.edge) + ',' + std::to_string(ed.u) + ',' + std::to_string(ed.v) +
           ',' + format_real(h.score) + ',' +
           (h.largest_after ? std::to_string(*h.largest_after) : std::string()) + ',' +
           format_real(bc.entries[i].score) + '\n';
  }
  return out;
}

std::vector<StrategyConfig> ExperimentSpec::default_strategies() {
  StrategyConfig hs;
  hs.metric = MetricKind::HS;
  StrategyConfig bc;
  bc.metric = MetricKind::EdgeBetweenness;
  return {hs, bc};
}

void ExperimentSpec::validate() const {
  if (alphas.empty()) throw Error("experiment: no alphas given");
  if (runs_per_alpha < 1) throw Error("experiment: runs_per_alpha must be at least 1");
  if (strategies.empty()) throw Error("experiment: no strategies given");
  for (double a : alphas) {
    GeneratorParams p;
    p.num_nodes = num_nodes;
    p.alpha = a;
    p.d_min = d_min;
    p.validate();
  }
  std::vector<std::string> names;
  for (const auto& s : strategies) names.push_back(s.name());
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end()) {
    throw Error("experiment: duplicate strategy " + *std::adjacent_find(names.begin(), names.end()));
  }
}

ExperimentSpec parse_experiment_spec(std::string_view json_text) {
  ExperimentSpec spec;
  spec.strategies = ExperimentSpec::default_strategies();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
    if (j.contains("alphas")) spec.alphas = j.at("alphas").get<std::vector<double>>();
    if (j.contains("nodes")) spec.num_nodes = j.at("nodes").get<std::size_t>();
    if (j.contains("runs")) spec.runs_per_alpha = j.at("runs").get<std::size_t>();
    if (j.contains("horizon")) spec.horizon = j.at("horizon").get<std::size_t>();
    if (j.contains("seed")) spec.master_seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("d_min")) spec.d_min = j.at("d_min").get<std::size_t>();
    if (j.contains("giant")) spec.extract_giant = j.at("giant").get<bool>();
    if (j.contains("threads")) spec.threads = j.at("threads").get<std::size_t>();
    if (j.contains("out")) spec.output_dir = j.at("out").get<std::string>();
    if (j.contains("strategies")) {
      spec.strategies.clear();
      for (const auto& s : j.at("strategies")) {
        StrategyConfig c;
        c.metric = parse_metric(s.at("metric").get<std::string>());
        if (s.contains("mode")) c.mode = parse_mode(s.at("mode").get<std::string>());
        if (s.contains("tie")) c.tie = parse_tie(s.at("tie").get<std::string>());
        spec.strategies.push_back(c);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("experiment config: ") + e.what());
  }
  return spec;
}

std::uint64_t derive_run_seed(std::uint64_t master_seed, std::size_t alpha_index,
                              std::size_t run) {
  const std::uint64_t slot = (static_cast<std::uint64_t>(alpha_index) << 32) ^
                             static_cast<std::uint64_t>(run);
  return splitmix64(master_seed ^ splitmix64(slot));
}

std::string run_file_stem(double alpha, std::size_t run) {
  return "alpha-" + format_alpha(alpha) + "_run-" + std::to_string(run);
}

const RunRecord& ExperimentReport::run(std::size_t alpha_index, std::size_t r) const {
  return runs.at(alpha_index * spec.runs_per_alpha + r);
}

const CurveSummary& ExperimentReport::curve(std::size_t alpha_index,
                                            std::size_t strategy_index) const {
  return curves.at(alpha_index * spec.strategies.size() + strategy_index);
}

ExperimentReport run_experiment(const ExperimentSpec& spec_in) {
  ExperimentSpec spec = spec_in;
  spec.validate();
  for (auto& s : spec.strategies) s.horizon = spec.horizon;

  ExperimentReport report;
  report.spec = spec;
  const std::size_t num_tasks = spec.alphas.size() * spec.runs_per_alpha;
  report.runs.resize(num_tasks);

  std::vector<Graph> graphs(spec.output_dir ? num_tasks : 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t t = next++; t < num_tasks; t = next++) {
      try {
        RunRecord& rec = report.runs[t];
        rec.alpha_index = t / spec.runs_per_alpha;
        rec.run = t % spec.runs_per_alpha;
        rec.seed = derive_run_seed(spec.master_seed, rec.alpha_index, rec.run);

        GeneratorParams params;
        params.num_nodes = spec.num_nodes;
        params.alpha = spec.alphas[rec.alpha_index];
        params.d_min = spec.d_min;
        params.extract_giant = spec.extract_giant;
        params.seed = rec.seed;
        Graph g = generate_scale_free(params);
        rec.num_nodes = g.num_nodes();
        rec.num_edges = g.num_edges();
        for (const auto& strategy : spec.strategies) {
          rec.traces.push_back(run_attack(g, strategy, rec.seed));
        }
        if (spec.output_dir) graphs[t] = std::move(g);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::size_t threads = spec.threads ? spec.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, num_tasks);
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t a = 0; a < spec.alphas.size(); ++a) {
    for (std::size_t s = 0; s < spec.strategies.size(); ++s) {
      CurveSummary curve;
      curve.alpha_index = a;
      curve.strategy_index = s;
      std::vector<std::vector<double>> columns(spec.horizon);
      std::vector<std::optional<std::size_t>> to075, to050, to025;
      for (std::size_t r = 0; r < spec.runs_per_alpha; ++r) {
        const AttackTrace& trace = report.run(a, r).traces[s];
        if (trace.size() < spec.horizon) ++curve.padded_runs;
        for (std::size_t q = 1; q <= spec.horizon; ++q) {
          columns[q - 1].push_back(trace.lcc_fraction(std::min(q, trace.size())));
        }
        to075.push_back(strikes_to_fraction(trace, 0.75));
        to050.push_back(strikes_to_fraction(trace, 0.50));
        to025.push_back(strikes_to_fraction(trace, 0.25));
      }
      for (auto& col : columns) {
        curve.mean_s.push_back(std::accumulate(col.begin(), col.end(), 0.0) /
                               static_cast<double>(col.size()));
        curve.median_s.push_back(median_of(col));
      }
      curve.median_strikes_to_075 = median_count(to075);
      curve.median_strikes_to_050 = median_count(to050);
      curve.median_strikes_to_025 = median_count(to025);
      report.curves.push_back(std::move(curve));
    }
  }

  if (spec.output_dir) {
    namespace fs = std::filesystem;
    const fs::path& root = *spec.output_dir;
    std::error_code ec;
    fs::create_directories(root / "traces", ec);
    fs::create_directories(root / "graphs", ec);
    if (ec) throw Error("cannot create output directory " + root.string() + ": " + ec.message());

    nlohmann::json runs = nlohmann::json::array();
    for (std::size_t t = 0; t < num_tasks; ++t) {
      const RunRecord& rec = report.runs[t];
      const std::string stem = run_file_stem(spec.alphas[rec.alpha_index], rec.run);
      write_file(root / "graphs" / (stem + ".edges"), write_edge_list(graphs[t]));
      nlohmann::json padded = nlohmann::json::object();
      for (std::size_t s = 0; s < spec.strategies.size(); ++s) {
        const AttackTrace& trace = rec.traces[s];
        write_file(root / "traces" / (stem + "_" + spec.strategies[s].name() + ".csv"),
                   write_trace_csv(trace));
        padded[spec.strategies[s].name()] = trace.size() < spec.horizon;
      }
      runs.push_back({{"alpha", spec.alphas[rec.alpha_index]},
                      {"run", rec.run},
                      {"seed", rec.seed},
                      {"nodes", rec.num_nodes},
                      {"edges", rec.num_edges},
                      {"padded", padded}});
    }
    write_file(root / "summary.csv", write_report_csv(report));

    nlohmann::json strategies = nlohmann::json::array();
    for (const auto& s : spec.strategies) strategies.push_back(strategy_to_json(s));
    nlohmann::json medians = nlohmann::json::array();
    for (const auto& c : report.curves) {
      auto opt = [](const std::optional<double>& v) {
        return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
      };
      medians.push_back({{"alpha", spec.alphas[c.alpha_index]},
                         {"strategy", spec.strategies[c.strategy_index].name()},
                         {"padded_runs", c.padded_runs},
                         {"median_strikes_to_0.75", opt(c.median_strikes_to_075)},
                         {"median_strikes_to_0.50", opt(c.median_strikes_to_050)},
                         {"median_strikes_to_0.25", opt(c.median_strikes_to_025)}});
    }
    const nlohmann::json provenance = {
        {"spec",
         {{"alphas", spec.alphas},
          {"nodes", spec.num_nodes},
          {"runs", spec.runs_per_alpha},
          {"horizon", spec.horizon},
          {"seed", spec.master_seed},
          {"d_min", spec.d_min},
          {"giant", spec.extract_giant},
          {"strategies", strategies}}},
        {"runs", runs},
        {"medians", medians}};
    write_file(root / "experiment.json", provenance.dump(2) + "\n");
  }
  return report;
}

std::string write_report_csv(const ExperimentReport& report) {
  const ExperimentSpec& spec = report.spec;
  std::vector<std::size_t> alpha_order(spec.alphas.size());
  std::iota(alpha_order.begin(), alpha_order.end(), 0);
  std::stable_sort(alpha_order.begin(), alpha_order.end(),
                   [&](std::size_t a, std::size_t b) { return spec.alphas[a] < spec.alphas[b]; });
  std::vector<std::size_t> strategy_order(spec.strategies.size());
  std::iota(strategy_order.begin(), strategy_order.end(), 0);
  std::stable_sort(strategy_order.begin(), strategy_order.end(), [&](std::size_t a, std::size_t b) {
    return spec.strategies[a].name() < spec.strategies[b].name();
  });

  std::string out =
      "alpha,strategy,run,R,R_50,R_100,strikes_to_0.75,strikes_to_0.50,strikes_to_0.25\n";
  for (std::size_t a : alpha_order) {
    for (std::size_t s : strategy_order) {
      for (std::size_t r = 0; r < spec.runs_per_alpha; ++r) {
        const AttackTrace& trace = report.run(a, r).traces[s];
        out += format_real(spec.alphas[a]) + ',' + spec.strategies[s].name() + ',' +
               std::to_string(r) + ',';
        out += trace.empty() ? std::string() : format_real(r_index(trace));
        for (std::size_t n : kSummaryWindows) {
          out += ',';
          if (n <= trace.size()) out += format_real(r_n_index(trace, n));
        }
        for (double t : kSummaryThresholds) {
          out += ',' + optional_count(strikes_to_fraction(trace, t));
        }
        out += '\n';
      }
    }
  }
  out += "alpha,strategy,Q,mean_s,median_s\n";
  for (std::size_t a : alpha_order) {
    for (std::size_t s : strategy_order) {
      const CurveSummary& c = report.curve(a, s);
      for (std::size_t q = 0; q < c.mean_s.size(); ++q) {
        out += format_real(spec.alphas[a]) + ',' + spec.strategies[s].name() + ',' +
               std::to_string(q + 1) + ',' + format_real(c.mean_s[q]) + ',' +
               format_real(c.median_s[q]) + '\n';
      }
    }
  }
  return out;
}

}  // namespace hscut
