#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hscut {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Raised for contract violations on graphs, traces and input files.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  NodeId u;
  NodeId v;
};

struct Incidence {
  NodeId neighbor;
  EdgeId edge;
};

/// Undirected simple graph with stable edge ids.
///
/// Removed edges are tombstoned: they keep their id and endpoints but no
/// longer appear in adjacency lists. Nodes are dense ids 0..N-1.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list; edge ids follow input order.
  /// Throws Error on self-loops, duplicate pairs or out-of-range endpoints.
  Graph(std::size_t num_nodes, std::span<const Edge> edges);

  std::size_t num_nodes() const { return adjacency_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_alive_edges() const { return alive_count_; }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  bool is_alive(EdgeId e) const { return e < alive_.size() && alive_[e]; }

  std::span<const Incidence> neighbors(NodeId v) const { return adjacency_.at(v); }
  std::size_t degree(NodeId v) const { return adjacency_.at(v).size(); }

  /// Alive edges in ascending id order.
  std::vector<EdgeId> alive_edges() const;

  /// Tombstones an alive edge. Throws Error if unknown or already removed.
  void remove_edge(EdgeId e);

 private:
  std::vector<Edge> edges_;
  std::vector<bool> alive_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::size_t alive_count_ = 0;
};

Graph build_graph(std::size_t num_nodes, std::span<const Edge> edges);

struct ComponentView {
  std::vector<std::uint32_t> component_id;  // per node
  std::vector<std::size_t> sizes;           // indexed by component id
  std::size_t largest_size = 0;

  std::size_t count() const { return sizes.size(); }
};

/// Components induced by alive edges, numbered in order of their smallest node.
ComponentView connected_components(const Graph& graph);

/// A bridge together with the node count on the DFS-child side of it.
struct BridgeSplit {
  EdgeId edge;
  std::size_t child_side_size;
  std::uint32_t component;
};

struct BridgeDecomposition {
  ComponentView components;
  std::vector<BridgeSplit> bridges;  // ascending edge id
};

/// One lowpoint DFS pass: components, bridges, and the size of the piece each
/// bridge cuts off.
BridgeDecomposition decompose_bridges(const Graph& graph);

/// Alive edges whose removal increases the component count, ascending id.
std::vector<EdgeId> bridges(const Graph& graph);

}  // namespace hscut
