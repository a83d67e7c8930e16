#include "hscut/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hscut {

std::string_view to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::HS: return "hs";
    case MetricKind::EdgeBetweenness: return "betweenness";
    case MetricKind::Random: return "random";
  }
  return "unknown";
}

const EdgeScore& MetricMap::at(EdgeId e) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), e,
                             [](const EdgeScore& s, EdgeId id) { return s.edge < id; });
  if (it == entries.end() || it->edge != e) {
    throw Error("metric map has no entry for edge " + std::to_string(e));
  }
  return *it;
}

EdgeId TiePolicy::pick(const std::vector<EdgeId>& candidates) {
  if (candidates.empty()) throw Error("tie policy: no candidates");
  if (kind_ == Kind::LowestEdgeId || candidates.size() == 1) {
    return candidates.front();
  }
  return candidates[uniform_index(rng_, candidates.size())];
}

MetricMap hs_index_all(const Graph& graph) {
  const auto dec = decompose_bridges(graph);
  const auto& sizes = dec.components.sizes;
  const std::size_t n = graph.num_nodes();

  // Largest component other than c is either the overall largest or the
  // runner-up when c is the largest.
  std::size_t first = 0, second = 0, first_id = 0;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    if (sizes[c] > first) {
      second = first;
      first = sizes[c];
      first_id = c;
    } else if (sizes[c] > second) {
      second = sizes[c];
    }
  }

  MetricMap map;
  map.kind = MetricKind::HS;
  map.total_nodes = n;
  map.entries.reserve(graph.num_alive_edges());
  auto bridge = dec.bridges.begin();
  for (EdgeId e : graph.alive_edges()) {
    if (bridge != dec.bridges.end() && bridge->edge == e) {
      const std::size_t comp = bridge->component;
      const std::size_t piece = bridge->child_side_size;
      const std::size_t rest = sizes[comp] - piece;
      const std::size_t others = comp == first_id ? second : first;
      const std::size_t largest = std::max({piece, rest, others});
      map.entries.push_back({e, static_cast<double>(n) / static_cast<double>(largest) - 1.0,
                             largest});
      ++bridge;
    } else {
      map.entries.push_back({e, 0.0, std::nullopt});
    }
  }
  return map;
}

MetricMap edge_betweenness_all(const Graph& graph) {
  const std::size_t n = graph.num_nodes();
  std::vector<double> acc(graph.num_edges(), 0.0);

  // Flat copy of the alive adjacency; the traversal below is cache-bound.
  std::vector<std::size_t> offset(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) offset[v + 1] = offset[v] + graph.degree(v);
  std::vector<Incidence> adj;
  adj.reserve(offset[n]);
  for (NodeId v = 0; v < n; ++v) {
    const auto nb = graph.neighbors(v);
    adj.insert(adj.end(), nb.begin(), nb.end());
  }

  constexpr auto kUnreached = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(n, kUnreached);
  std::vector<double> sigma(n, 0.0);
  std::vector<double> delta(n, 0.0);
  std::vector<NodeId> order;
  order.reserve(n);

  for (NodeId s = 0; s < n; ++s) {
    if (offset[s] == offset[s + 1]) continue;
    order.clear();
    order.push_back(s);
    dist[s] = 0;
    sigma[s] = 1.0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId v = order[head];
      const std::uint32_t next = dist[v] + 1;
      for (std::size_t i = offset[v]; i < offset[v + 1]; ++i) {
        const NodeId w = adj[i].neighbor;
        if (dist[w] == kUnreached) {
          dist[w] = next;
          order.push_back(w);
        }
        if (dist[w] == next) sigma[w] += sigma[v];
      }
    }
    for (std::size_t k = order.size(); k-- > 1;) {
      const NodeId w = order[k];
      const double coeff = (1.0 + delta[w]) / sigma[w];
      const std::uint32_t prev = dist[w] - 1;
      for (std::size_t i = offset[w]; i < offset[w + 1]; ++i) {
        const NodeId v = adj[i].neighbor;
        if (dist[v] != prev) continue;
        const double c = sigma[v] * coeff;
        acc[adj[i].edge] += c;
        delta[v] += c;
      }
    }
    for (NodeId v : order) {
      dist[v] = kUnreached;
      sigma[v] = 0.0;
      delta[v] = 0.0;
    }
  }

  MetricMap map;
  map.kind = MetricKind::EdgeBetweenness;
  map.total_nodes = n;
  map.entries.reserve(graph.num_alive_edges());
  // Every unordered pair was accumulated once from each endpoint.
  for (EdgeId e : graph.alive_edges()) map.entries.push_back({e, acc[e] / 2.0, std::nullopt});
  return map;
}

MetricMap uniform_scores(const Graph& graph) {
  MetricMap map;
  map.kind = MetricKind::Random;
  map.total_nodes = graph.num_nodes();
  for (EdgeId e : graph.alive_edges()) map.entries.push_back({e, 0.0, std::nullopt});
  return map;
}

MetricMap compute_metric(const Graph& graph, MetricKind kind) {
  switch (kind) {
    case MetricKind::HS: return hs_index_all(graph);
    case MetricKind::EdgeBetweenness: return edge_betweenness_all(graph);
    case MetricKind::Random: return uniform_scores(graph);
  }
  throw Error("unknown metric kind");
}

namespace {

std::size_t hs_key(const MetricMap& m, const EdgeScore& s) {
  return s.largest_after.value_or(m.total_nodes);
}

bool within_tolerance(double value, double reference) {
  return reference - value <= kBetweennessRelTol * std::abs(reference);
}

// Entries in descending score order, grouped into runs of equal score.
std::vector<std::vector<EdgeId>> tie_groups(const MetricMap& metric) {
  std::vector<const EdgeScore*> sorted;
  sorted.reserve(metric.size());
  for (const auto& s : metric.entries) sorted.push_back(&s);

  std::vector<std::vector<EdgeId>> groups;
  if (metric.kind == MetricKind::HS) {
    std::stable_sort(sorted.begin(), sorted.end(), [&](const EdgeScore* a, const EdgeScore* b) {
      return hs_key(metric, *a) < hs_key(metric, *b);
    });
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (i == 0 || hs_key(metric, *sorted[i]) != hs_key(metric, *sorted[i - 1])) {
        groups.emplace_back();
      }
      groups.back().push_back(sorted[i]->edge);
    }
  } else {
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const EdgeScore* a, const EdgeScore* b) { return a->score > b->score; });
    double head = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (i == 0 || !within_tolerance(sorted[i]->score, head)) {
        groups.emplace_back();
        head = sorted[i]->score;
      }
      groups.back().push_back(sorted[i]->edge);
    }
  }
  for (auto& g : groups) std::sort(g.begin(), g.end());
  return groups;
}

}  // namespace

std::vector<EdgeId> maximal_edges(const MetricMap& metric) {
  std::vector<EdgeId> out;
  if (metric.empty()) return out;
  if (metric.kind == MetricKind::HS) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& s : metric.entries) best = std::min(best, hs_key(metric, s));
    for (const auto& s : metric.entries) {
      if (hs_key(metric, s) == best) out.push_back(s.edge);
    }
  } else {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& s : metric.entries) best = std::max(best, s.score);
    for (const auto& s : metric.entries) {
      if (within_tolerance(s.score, best)) out.push_back(s.edge);
    }
  }
  return out;
}

EdgeId select_target(const MetricMap& metric, TiePolicy& policy) {
  if (metric.empty()) throw Error("select_target: empty metric map");
  return policy.pick(maximal_edges(metric));
}

std::vector<EdgeId> rank_edges(const MetricMap& metric, TiePolicy& policy) {
  std::vector<EdgeId> out;
  out.reserve(metric.size());
  for (auto& group : tie_groups(metric)) {
    if (policy.kind() == TiePolicy::Kind::SeededRandom) shuffle(group, policy.rng());
    out.insert(out.end(), group.begin(), group.end());
  }
  return out;
}

}  // namespace hscut
