#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "latentid/loglinear.hpp"
#include "latentid/numeric.hpp"

namespace latentid {

enum class EquationSource {
  Locus,          // a complete set without identifying sequence, per boundary set V0
  Disconnection,  // a pair of components of the complement of G^S
};

/// Linear equation Σ terms = 0 over latent-interaction coordinates, all with coefficient +1.
struct SingularEquation {
  /// terms.front() is the designated coordinate solved for when sampling;
  /// the remaining terms are sorted.
  std::vector<ParamKey> terms;
  EquationSource source = EquationSource::Locus;
  NodeSet origin;    // failing set I0, or S for disconnection equations
  NodeSet boundary;  // V0, or S' for disconnection equations

  /// "b{0,2} + b{0,2,5} = 0"
  std::string to_string() const;

  /// Literal equality of the coordinate lists.
  friend bool operator==(const SingularEquation& a, const SingularEquation& b) {
    return a.terms == b.terms;
  }
};

struct SingularSystem {
  std::vector<SingularEquation> equations;
  std::optional<int> expected_rank_drop;  // unset: unknown

  bool empty() const { return equations.empty(); }
};

/// Complete subsets of G^S of size >= 2 without an identifying sequence,
/// in original node ids (decreasing size, then lexicographic).
std::vector<NodeSet> failing_sets(const LatentModel& m);

/// Locus equations induced by the complete set `i0` of G^S.
///
/// For every complete V0 inside the complement boundary of `i0`, with
/// shared = {i in i0 adjacent to all of V0} non-empty, one equation
///   b{0,V0} + Σ_{∅ ≠ I ⊆ shared} b{0,I,V0} = 0
/// per level combination of V0 ∪ shared. Boundary sets with no shared
/// neighbour would force b{0,V0} = 0, which lies outside the parameter space,
/// and are skipped. Throws NotApplicable if `i0` has an identifying sequence.
std::vector<SingularEquation> locus_equations_for_set(const LatentModel& m, NodeSet i0);

/// Equations from pairs of components of the complement of G^S: for complete
/// I1 in one component and J in another, Σ_{I ⊆ I1∪J, I ∩ J ≠ ∅} b{0,I} = 0.
/// Throws NotApplicable when the complement is connected.
std::vector<SingularEquation> disconnection_equations(const LatentModel& m);

/// Deduplicated union of the locus equations over every failing set.
/// Throws NotApplicable unless the complement of G^S holds a clique of size
/// >= 3 and some complete set lacks an identifying sequence.
SingularSystem full_system(const LatentModel& m);

/// A non-zero β satisfying every equation of `sys`: free coordinates come from
/// the standard sampling law, designated coordinates are solved for. Throws
/// InconsistentSystem when the designated coordinates cannot be solved for.
BetaVector sample_on_subspace(const SingularSystem& sys, const ParamIndex& idx, std::mt19937_64& rng);
BetaVector sample_on_subspace(const SingularSystem& sys, const ParamIndex& idx, std::uint64_t seed);

}  // namespace latentid
