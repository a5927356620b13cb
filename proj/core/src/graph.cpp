#include "latentid/graph.hpp"

#include <algorithm>
#include <string>

#include "latentid/error.hpp"

namespace latentid {

std::string NodeSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](int v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  out += '}';
  return out;
}

bool lex_less(NodeSet a, NodeSet b) {
  const auto va = a.to_vector();
  const auto vb = b.to_vector();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

bool size_lex_less(NodeSet a, NodeSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

Graph::Graph(int node_count, const std::vector<Edge>& edges) {
  if (node_count < 0 || node_count > NodeSet::kCapacity) {
    throw ValidationError("node count " + std::to_string(node_count) + " outside [0, 64]");
  }
  adjacency_.assign(static_cast<std::size_t>(node_count), NodeSet{});
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= node_count || j >= node_count) {
      throw ValidationError("edge (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    }
    if (i == j) throw ValidationError("self-loop at node " + std::to_string(i));
    if (adjacent(i, j)) {
      throw ValidationError("duplicate edge (" + std::to_string(std::min(i, j)) + "," +
                            std::to_string(std::max(i, j)) + ")");
    }
    adjacency_[static_cast<std::size_t>(i)].insert(j);
    adjacency_[static_cast<std::size_t>(j)].insert(i);
  }
}

Graph Graph::from_adjacency(std::vector<NodeSet> adjacency) {
  Graph g;
  g.adjacency_ = std::move(adjacency);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (NodeSet s : adjacency_) twice += static_cast<std::size_t>(s.size());
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < node_count(); ++i) {
    (neighbors(i) - NodeSet::first_n(i + 1)).for_each([&](int j) { out.emplace_back(i, j); });
  }
  return out;
}

bool Graph::is_complete(NodeSet s) const {
  bool ok = true;
  s.for_each([&](int v) {
    if (ok && !neighbors(v).contains(s - NodeSet::single(v))) ok = false;
  });
  return ok;
}

NodeSet InducedSubgraph::to_original(NodeSet local) const {
  NodeSet out;
  local.for_each([&](int v) { out.insert(original_ids[static_cast<std::size_t>(v)]); });
  return out;
}

NodeSet InducedSubgraph::to_local(NodeSet original) const {
  NodeSet out;
  for (std::size_t k = 0; k < original_ids.size(); ++k) {
    if (original.contains(original_ids[k])) out.insert(static_cast<int>(k));
  }
  return out;
}

Graph complement(const Graph& g) {
  const NodeSet all = g.nodes();
  std::vector<NodeSet> adj(static_cast<std::size_t>(g.node_count()));
  for (int v = 0; v < g.node_count(); ++v) {
    adj[static_cast<std::size_t>(v)] = all - g.neighbors(v) - NodeSet::single(v);
  }
  return Graph::from_adjacency(std::move(adj));
}

InducedSubgraph induced_subgraph(const Graph& g, NodeSet nodes) {
  InducedSubgraph out;
  out.original_ids = (nodes & g.nodes()).to_vector();
  const std::size_t k = out.original_ids.size();
  std::vector<NodeSet> adj(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (g.adjacent(out.original_ids[a], out.original_ids[b])) adj[a].insert(static_cast<int>(b));
    }
  }
  out.graph = Graph::from_adjacency(std::move(adj));
  return out;
}

namespace {

// Bron-Kerbosch with the pivot fixed to the lowest id in P ∪ X.
void bron_kerbosch(const Graph& g, NodeSet r, NodeSet p, NodeSet x, std::vector<NodeSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  const int pivot = (p | x).front();
  const NodeSet candidates = p - g.neighbors(pivot);
  candidates.for_each([&](int v) {
    const NodeSet nv = g.neighbors(v);
    bron_kerbosch(g, r | NodeSet::single(v), p & nv, x & nv, out);
    p.erase(v);
    x.insert(v);
  });
}

void extend_complete(const Graph& g, NodeSet current, NodeSet candidates, int min_size,
                     std::vector<NodeSet>& out) {
  if (current.size() >= min_size) out.push_back(current);
  candidates.for_each([&](int v) {
    const NodeSet later = candidates - NodeSet::first_n(v + 1);
    extend_complete(g, current | NodeSet::single(v), later & g.neighbors(v), min_size, out);
  });
}

}  // namespace

std::vector<NodeSet> maximal_cliques(const Graph& g) {
  std::vector<NodeSet> out;
  if (g.node_count() == 0) return out;
  bron_kerbosch(g, NodeSet{}, g.nodes(), NodeSet{}, out);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<NodeSet> complete_subsets(const Graph& g, int min_size) {
  std::vector<NodeSet> out;
  extend_complete(g, NodeSet{}, g.nodes(), std::max(min_size, 1), out);
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

std::vector<NodeSet> connected_components(const Graph& g) {
  std::vector<NodeSet> out;
  NodeSet unseen = g.nodes();
  while (!unseen.empty()) {
    NodeSet comp = NodeSet::single(unseen.front());
    NodeSet frontier = comp;
    while (!frontier.empty()) {
      NodeSet next;
      frontier.for_each([&](int v) { next |= g.neighbors(v); });
      frontier = next - comp;
      comp |= frontier;
    }
    out.push_back(comp);
    unseen = unseen - comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

NodeSet boundary_in(const Graph& g, NodeSet s) {
  NodeSet out;
  s.for_each([&](int v) { out |= g.neighbors(v); });
  return out - s;
}

}  // namespace latentid
