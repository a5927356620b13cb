#include "latentid/identify.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "latentid/error.hpp"

namespace latentid {

namespace {

NodeSet non_neighbours(const Graph& g, int v) {
  return g.nodes() - g.neighbors(v) - NodeSet::single(v);
}

// Every node of `from` has a non-neighbour in `to`.
bool links(const Graph& g, NodeSet from, NodeSet to) {
  bool ok = true;
  from.for_each([&](int v) {
    if (ok && !non_neighbours(g, v).intersects(to)) ok = false;
  });
  return ok;
}

// Breadth-first search over complete subsets. `expandable(s)` decides whether a
// state is queued, `goal(s)` ends the search. Candidates are tried in
// size-then-lexicographic order so the returned chain is deterministic.
template <typename Expandable, typename Goal>
std::optional<std::vector<NodeSet>> bfs_chain(const Graph& g, NodeSet start,
                                              const std::vector<NodeSet>& candidates,
                                              Expandable&& expandable, Goal&& goal) {
  std::unordered_map<NodeSet, NodeSet, NodeSetHash> parent;
  parent.emplace(start, start);
  std::deque<NodeSet> queue{start};
  while (!queue.empty()) {
    const NodeSet cur = queue.front();
    queue.pop_front();
    for (NodeSet next : candidates) {
      if (next.size() > cur.size() || parent.contains(next) || !links(g, cur, next)) continue;
      if (goal(next)) {
        std::vector<NodeSet> chain{next};
        for (NodeSet s = cur; s != start; s = parent.at(s)) chain.push_back(s);
        chain.push_back(start);
        std::reverse(chain.begin(), chain.end());
        return chain;
      }
      if (!expandable(next)) continue;
      parent.emplace(next, cur);
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

void require_complete_target(const Graph& g, NodeSet target) {
  if (target.size() < 2) {
    throw ValidationError("sequence target " + target.to_string() + " needs at least two nodes");
  }
  if (!g.nodes().contains(target) || !g.is_complete(target)) {
    throw ValidationError("sequence target " + target.to_string() + " is not complete");
  }
}

}  // namespace

bool is_valid_cert(const Graph& g, const SequenceCert& cert) {
  const auto& chain = cert.chain;
  if (chain.size() < 2 || chain.front() != cert.target) return false;
  for (NodeSet s : chain) {
    if (s.empty() || !g.nodes().contains(s) || !g.is_complete(s)) return false;
  }
  for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
    if (!links(g, chain[s], chain[s + 1])) return false;
  }
  const int k = cert.target.size();
  if (cert.kind == SequenceKind::Generalized) {
    for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
      if (chain[s + 1].size() > chain[s].size()) return false;
    }
    return chain.back().size() == 1;
  }
  for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
    if (chain[s].size() != k) return false;
  }
  if (chain.back().size() >= k) return false;
  for (std::size_t a = 0; a < chain.size(); ++a) {
    for (std::size_t b = a + 1; b < chain.size(); ++b) {
      if (chain[a] == chain[b]) return false;
    }
  }
  return true;
}

std::optional<SequenceCert> find_generalized_sequence(const Graph& g, NodeSet c0) {
  require_complete_target(g, c0);
  std::vector<NodeSet> candidates;
  for (NodeSet s : complete_subsets(g, 1)) {
    if (s.size() <= c0.size()) candidates.push_back(s);
  }
  auto chain = bfs_chain(
      g, c0, candidates, [](NodeSet) { return true; }, [](NodeSet s) { return s.size() == 1; });
  if (!chain) return std::nullopt;
  return SequenceCert{c0, std::move(*chain), SequenceKind::Generalized};
}

std::optional<SequenceCert> find_identifying_sequence(const Graph& g, NodeSet i0) {
  require_complete_target(g, i0);
  const int k = i0.size();
  std::vector<NodeSet> candidates;
  for (NodeSet s : complete_subsets(g, 1)) {
    if (s.size() <= k) candidates.push_back(s);
  }
  auto chain = bfs_chain(
      g, i0, candidates, [k](NodeSet s) { return s.size() == k; },
      [k](NodeSet s) { return s.size() < k; });
  if (!chain) return std::nullopt;
  return SequenceCert{i0, std::move(*chain), SequenceKind::Plain};
}

std::optional<ComplementOrdering> appendix_ordering(const Graph& g_comp, NodeSet c) {
  if (c.empty()) throw ValidationError("ordering needs a non-empty starting set");
  const auto n = static_cast<std::size_t>(g_comp.node_count());

  // Lexicographically smallest shortest path from c to every node, level by level.
  std::vector<std::vector<int>> path(n);
  c.for_each([&](int v) { path[static_cast<std::size_t>(v)] = {v}; });
  NodeSet reached = c;
  NodeSet frontier = c;
  while (!frontier.empty()) {
    NodeSet next;
    frontier.for_each([&](int u) { next |= g_comp.neighbors(u); });
    next = next - reached;
    next.for_each([&](int v) {
      const std::vector<int>* best = nullptr;
      (g_comp.neighbors(v) & frontier).for_each([&](int u) {
        const auto& candidate = path[static_cast<std::size_t>(u)];
        if (best == nullptr || candidate < *best) best = &candidate;
      });
      path[static_cast<std::size_t>(v)] = *best;
      path[static_cast<std::size_t>(v)].push_back(v);
    });
    reached |= next;
    frontier = next;
  }
  if (reached != g_comp.nodes()) return std::nullopt;

  ComplementOrdering out;
  out.order = c.to_vector();
  NodeSet unordered = g_comp.nodes() - c;
  while (!unordered.empty()) {
    int farthest = -1;
    unordered.for_each([&](int v) {
      if (farthest < 0 || path[static_cast<std::size_t>(v)].size() >
                              path[static_cast<std::size_t>(farthest)].size()) {
        farthest = v;
      }
    });
    const auto& walk = path[static_cast<std::size_t>(farthest)];
    std::size_t anchor = 0;
    for (std::size_t k = 0; k < walk.size(); ++k) {
      if (!unordered.contains(walk[k])) anchor = k;
    }
    const int b = walk[anchor];
    std::vector<int> group(walk.begin() + static_cast<std::ptrdiff_t>(anchor) + 1, walk.end());
    for (std::size_t k = 0; k < group.size(); ++k) {
      out.pairs.emplace_back(group[k], walk[anchor + k]);
      unordered.erase(group[k]);
    }
    if (c.contains(b)) {
      out.order.insert(out.order.end(), group.begin(), group.end());
    } else {
      auto at = std::find(out.order.begin(), out.order.end(), b);
      out.order.insert(at + 1, group.begin(), group.end());
    }
  }
  return out;
}

bool latent_class_check(int n) {
  if (n < 1) throw ValidationError("latent class model needs at least one observed node");
  return n >= 3;
}

LatentPartition latent_partition(const LatentModel& m) {
  LatentPartition out;
  out.adjacent = m.graph().neighbors(kLatent);
  out.non_adjacent = m.observed() - out.adjacent;
  if (out.adjacent.empty()) throw LatentIsolated();
  return out;
}

InducedSubgraph latent_neighbourhood(const LatentModel& m) {
  return induced_subgraph(m.graph(), latent_partition(m).adjacent);
}

std::vector<NodeSet> sets_without_sequence(const Graph& g) {
  std::vector<NodeSet> out;
  for (NodeSet s : complete_subsets(g, 2)) {
    if (!find_identifying_sequence(g, s)) out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(), [](NodeSet a, NodeSet b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return lex_less(a, b);
  });
  return out;
}

}  // namespace latentid
