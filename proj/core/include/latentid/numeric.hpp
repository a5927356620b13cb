#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "latentid/loglinear.hpp"

namespace latentid {

struct SingularSystem;

/// Natural parameters: one non-zero real per ParamIndex column.
class BetaVector {
 public:
  /// Throws ValidationError if any entry is zero or not finite.
  explicit BetaVector(Eigen::VectorXd values);

  const Eigen::VectorXd& values() const { return values_; }
  Eigen::Index size() const { return values_.size(); }
  double operator[](Eigen::Index k) const { return values_[k]; }

 private:
  Eigen::VectorXd values_;
};

/// Largest |Zβ| accepted before exp() is considered unsafe.
inline constexpr double kSafeExponent = 700.0;

/// Independent stream for trial `trial` of a run seeded with `seed`.
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial);

/// Uniform on [-1.5, -0.5] ∪ [0.5, 1.5].
double draw_coordinate(std::mt19937_64& rng);
BetaVector sample_beta(std::size_t p, std::mt19937_64& rng);

/// Precomputed Z and L for repeated Jacobian evaluation.
class JacobianEvaluator {
 public:
  JacobianEvaluator(const LatentModel& m, const ParamIndex& idx);

  std::size_t parameter_count() const { return static_cast<std::size_t>(z_.cols()); }
  const Eigen::MatrixXd& design() const { return z_; }

  /// μ_X = exp(Zβ). Throws Overflow past kSafeExponent.
  Eigen::VectorXd joint_means(const BetaVector& beta) const;
  /// μ_Y = L exp(Zβ).
  Eigen::VectorXd observed_means(const BetaVector& beta) const;
  /// D(β) = L diag(exp(Zβ)) Z; rows index observed cells, columns index β.
  Eigen::MatrixXd jacobian(const BetaVector& beta) const;

 private:
  Eigen::MatrixXd z_;
  Eigen::Index observed_cells_;
};

Eigen::MatrixXd jacobian(const LatentModel& m, const ParamIndex& idx, const BetaVector& beta);

struct RankOptions {
  /// Threshold relative to the largest singular value; max(rows, cols) * eps when unset.
  std::optional<double> relative_tolerance;
  /// σ_rank / σ_{rank+1} below this marks the decision ambiguous.
  double min_gap = 1e3;
  /// Rescale rows and columns to unit max-norm before the SVD. Rank is unchanged
  /// by non-singular diagonal scaling, while the spread of exp(Zβ) is removed.
  bool equilibrate = true;
};

struct RankReport {
  int rank = 0;
  std::vector<double> singular_values;  // descending
  double tolerance_used = 0.0;          // absolute threshold on the singular values
  std::size_t columns = 0;
  double gap = 0.0;                     // σ_rank / σ_{rank+1}; +inf when undefined
  bool ambiguous = false;
};

RankReport numeric_rank(const Eigen::MatrixXd& mat, const RankOptions& options = {});

/// Ranks observed over a batch of seeded parameter draws.
struct SampledRank {
  int max_rank = 0;
  int modal_rank = 0;
  std::vector<int> ranks;  // one per trial
  int ambiguous_trials = 0;
  RankReport best;         // report of the first trial attaining max_rank
  std::uint64_t seed = 0;
  std::size_t parameter_count = 0;

  bool uniform() const;
  int min_rank() const;
};

/// Maximum rank of D(β) over `trials` unconstrained draws.
SampledRank generic_rank(const LatentModel& m, int trials, std::uint64_t seed,
                         const RankOptions& options = {});

/// Maximum rank of D(β) over `trials` draws from the subspace cut out by `sys`.
SampledRank rank_on_system(const LatentModel& m, const SingularSystem& sys, int trials,
                           std::uint64_t seed, const RankOptions& options = {});

}  // namespace latentid
