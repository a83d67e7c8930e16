#include "hscut/graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace hscut {
namespace {

std::uint64_t pair_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::string pair_text(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

Graph::Graph(std::size_t num_nodes, std::span<const Edge> edges)
    : edges_(edges.begin(), edges.end()),
      alive_(edges.size(), true),
      adjacency_(num_nodes),
      alive_count_(edges.size()) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u >= num_nodes || e.v >= num_nodes) {
      throw Error("edge " + std::to_string(i) + " " + pair_text(e) +
                  ": endpoint out of range for " + std::to_string(num_nodes) +
                  " nodes");
    }
    if (e.u == e.v) {
      throw Error("edge " + std::to_string(i) + " " + pair_text(e) + ": self-loop");
    }
    if (!seen.insert(pair_key(e.u, e.v)).second) {
      throw Error("edge " + std::to_string(i) + " " + pair_text(e) + ": duplicate pair");
    }
    const auto id = static_cast<EdgeId>(i);
    adjacency_[e.u].push_back({e.v, id});
    adjacency_[e.v].push_back({e.u, id});
  }
}

std::vector<EdgeId> Graph::alive_edges() const {
  std::vector<EdgeId> out;
  out.reserve(alive_count_);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (alive_[i]) out.push_back(static_cast<EdgeId>(i));
  }
  return out;
}

void Graph::remove_edge(EdgeId e) {
  if (e >= edges_.size()) {
    throw Error("remove_edge: unknown edge id " + std::to_string(e));
  }
  if (!alive_[e]) {
    throw Error("remove_edge: edge " + std::to_string(e) + " already removed");
  }
  alive_[e] = false;
  --alive_count_;
  for (NodeId end : {edges_[e].u, edges_[e].v}) {
    auto& list = adjacency_[end];
    auto it = std::find_if(list.begin(), list.end(),
                           [e](const Incidence& inc) { return inc.edge == e; });
    *it = list.back();
    list.pop_back();
  }
}

Graph build_graph(std::size_t num_nodes, std::span<const Edge> edges) {
  return Graph(num_nodes, edges);
}

ComponentView connected_components(const Graph& graph) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  const std::size_t n = graph.num_nodes();
  ComponentView view;
  view.component_id.assign(n, kUnset);
  std::vector<NodeId> queue;
  queue.reserve(n);
  for (NodeId root = 0; root < n; ++root) {
    if (view.component_id[root] != kUnset) continue;
    const auto label = static_cast<std::uint32_t>(view.sizes.size());
    queue.clear();
    queue.push_back(root);
    view.component_id[root] = label;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const Incidence& inc : graph.neighbors(queue[head])) {
        if (view.component_id[inc.neighbor] == kUnset) {
          view.component_id[inc.neighbor] = label;
          queue.push_back(inc.neighbor);
        }
      }
    }
    view.sizes.push_back(queue.size());
    view.largest_size = std::max(view.largest_size, queue.size());
  }
  return view;
}

BridgeDecomposition decompose_bridges(const Graph& graph) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  const std::size_t n = graph.num_nodes();

  BridgeDecomposition out;
  ComponentView& view = out.components;
  view.component_id.assign(n, kUnset);

  std::vector<std::uint32_t> discovery(n, 0);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<std::size_t> subtree(n, 0);

  struct Frame {
    NodeId node;
    EdgeId parent_edge;
    std::size_t next;  // index into neighbors(node)
  };
  std::vector<Frame> stack;
  constexpr auto kNoEdge = static_cast<EdgeId>(-1);

  std::uint32_t timer = 0;
  for (NodeId root = 0; root < n; ++root) {
    if (view.component_id[root] != kUnset) continue;
    const auto label = static_cast<std::uint32_t>(view.sizes.size());
    std::size_t size = 0;

    view.component_id[root] = label;
    discovery[root] = low[root] = ++timer;
    subtree[root] = 1;
    ++size;
    stack.push_back({root, kNoEdge, 0});

    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto adj = graph.neighbors(top.node);
      if (top.next < adj.size()) {
        const Incidence inc = adj[top.next++];
        if (inc.edge == top.parent_edge) continue;
        const NodeId w = inc.neighbor;
        if (view.component_id[w] == kUnset) {
          view.component_id[w] = label;
          discovery[w] = low[w] = ++timer;
          subtree[w] = 1;
          ++size;
          stack.push_back({w, inc.edge, 0});
        } else {
          low[top.node] = std::min(low[top.node], discovery[w]);
        }
        continue;
      }
      const Frame done = top;
      stack.pop_back();
      if (stack.empty()) break;
      const NodeId parent = stack.back().node;
      low[parent] = std::min(low[parent], low[done.node]);
      subtree[parent] += subtree[done.node];
      if (low[done.node] > discovery[parent]) {
        out.bridges.push_back({done.parent_edge, subtree[done.node], label});
      }
    }
    view.sizes.push_back(size);
    view.largest_size = std::max(view.largest_size, size);
  }

  std::sort(out.bridges.begin(), out.bridges.end(),
            [](const BridgeSplit& a, const BridgeSplit& b) { return a.edge < b.edge; });
  return out;
}

std::vector<EdgeId> bridges(const Graph& graph) {
  const auto dec = decompose_bridges(graph);
  std::vector<EdgeId> out;
  out.reserve(dec.bridges.size());
  for (const auto& b : dec.bridges) out.push_back(b.edge);
  return out;
}

}  // namespace hscut
