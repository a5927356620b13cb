#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "latentid/graph.hpp"
#include "latentid/loglinear.hpp"

namespace latentid {

enum class SequenceKind { Generalized, Plain };

/// A witness chain target = chain[0], chain[1], ... of complete subsets.
///
/// Generalized chains shrink weakly and end in a singleton. Plain chains keep
/// the size of the target, end in one strictly smaller set, and never repeat a
/// set. In both kinds every node of chain[s] has a non-neighbour in chain[s+1].
struct SequenceCert {
  NodeSet target;
  std::vector<NodeSet> chain;
  SequenceKind kind = SequenceKind::Generalized;

  friend bool operator==(const SequenceCert&, const SequenceCert&) = default;
};

/// Checks every structural invariant of `cert` against `g`.
bool is_valid_cert(const Graph& g, const SequenceCert& cert);

/// Shortest generalized chain from the clique `c0` (|c0| > 1) down to a singleton.
/// Throws ValidationError if `c0` is not complete or has fewer than two nodes.
std::optional<SequenceCert> find_generalized_sequence(const Graph& g, NodeSet c0);

/// Shortest plain identifying chain for the complete set `i0` (|i0| >= 2).
std::optional<SequenceCert> find_identifying_sequence(const Graph& g, NodeSet i0);

/// Order of the nodes outside `c` built from shortest complement paths into `c`.
struct ComplementOrdering {
  std::vector<int> order;                  // members of c first, then the rest
  std::vector<std::pair<int, int>> pairs;  // (node, partner) for each node outside c
};

/// Each node v outside `c` receives as partner its predecessor on the shortest
/// path from `c` to v in `g_comp`; the partner lies in `c` or precedes v in the
/// order. Returns nullopt when some node cannot reach `c`.
std::optional<ComplementOrdering> appendix_ordering(const Graph& g_comp, NodeSet c);

/// Latent class model (star, no observed edges) with n observed binary nodes.
bool latent_class_check(int n);

/// Observed nodes adjacent (S) and not adjacent (T1) to the latent node.
struct LatentPartition {
  NodeSet adjacent;
  NodeSet non_adjacent;
};

/// Throws LatentIsolated if the latent node has no neighbours.
LatentPartition latent_partition(const LatentModel& m);

/// G^S relabelled to contiguous ids.
InducedSubgraph latent_neighbourhood(const LatentModel& m);

/// Complete subsets of size >= 2 of `g` without a plain identifying sequence,
/// ordered by decreasing size, then lexicographically.
std::vector<NodeSet> sets_without_sequence(const Graph& g);

}  // namespace latentid
