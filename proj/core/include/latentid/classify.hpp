#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latentid/identify.hpp"
#include "latentid/singular.hpp"

namespace latentid {

enum class Status { IdentifiedEverywhere, GenericallyIdentified, NotIdentified };

std::string to_string(Status status);

struct CliqueCheck {
  NodeSet clique;
  std::optional<SequenceCert> sequence;  // unset: no generalized sequence exists
};

/// Structural facts behind a verdict, in original node ids.
struct Evidence {
  LatentPartition partition;
  std::optional<NodeSet> m_clique;  // largest clique (size >= 3) of the complement of G^S
  bool complement_connected = false;
  std::vector<NodeSet> components;  // connected components of G^S
  std::vector<CliqueCheck> clique_checks;
  std::vector<NodeSet> failing_sets;
  std::optional<ComplementOrdering> ordering;
};

struct Verdict {
  Status status = Status::NotIdentified;
  /// Rank drops somewhere, but only a numeric probe can locate where.
  bool probe_only = false;
  Evidence evidence;
  std::optional<SingularSystem> singular;
};

/// Structural identifiability of `m` from the topology of G^S.
///
/// A clique of size >= 3 in the complement of G^S plus a generalized sequence
/// for every clique of G^S gives full rank everywhere. Without such a clique
/// G^S is either connected (rank full almost everywhere, singular set left to
/// the numeric probe) or made of at most two complete components (rank
/// deficient everywhere). A clique without sequence gives a singular system.
/// Throws LatentIsolated when the latent node has no neighbours.
Verdict classify(const LatentModel& m);

}  // namespace latentid
