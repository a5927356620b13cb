#pragma once

#include <utility>
#include <vector>

#include "latentid/node_set.hpp"

namespace latentid {

using Edge = std::pair<int, int>;

/// Immutable undirected simple graph over nodes 0..node_count-1.
class Graph {
 public:
  Graph() = default;
  /// Throws ValidationError on self-loops, out-of-range ids or duplicate edges.
  Graph(int node_count, const std::vector<Edge>& edges);

  /// Graph whose edges are given by adjacency masks; the masks must be symmetric.
  static Graph from_adjacency(std::vector<NodeSet> adjacency);

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  NodeSet nodes() const { return NodeSet::first_n(node_count()); }
  NodeSet neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  bool adjacent(int i, int j) const { return adjacency_[static_cast<std::size_t>(i)].contains(j); }
  std::size_t edge_count() const;

  /// Canonical (min, max) pairs in lexicographic order.
  std::vector<Edge> edges() const;

  /// True when every pair of distinct members of `s` is adjacent.
  bool is_complete(NodeSet s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<NodeSet> adjacency_;
};

/// Induced subgraph relabelled to contiguous ids, with the map back to the parent.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> original_ids;  // local id -> parent id

  NodeSet to_original(NodeSet local) const;
  /// Parent members outside the subgraph are dropped.
  NodeSet to_local(NodeSet original) const;
};

Graph complement(const Graph& g);
InducedSubgraph induced_subgraph(const Graph& g, NodeSet nodes);

/// Maximal cliques, each ascending, the list in lexicographic order.
std::vector<NodeSet> maximal_cliques(const Graph& g);

/// Every complete subset with at least `min_size` nodes, ordered by size then lexicographically.
std::vector<NodeSet> complete_subsets(const Graph& g, int min_size);

bool is_connected(const Graph& g);

/// Components ordered by smallest member.
std::vector<NodeSet> connected_components(const Graph& g);

/// Nodes outside `s` adjacent to at least one member of `s`.
NodeSet boundary_in(const Graph& g, NodeSet s);

}  // namespace latentid
