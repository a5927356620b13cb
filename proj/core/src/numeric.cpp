#include "latentid/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "latentid/error.hpp"
#include "latentid/singular.hpp"

namespace latentid {

BetaVector::BetaVector(Eigen::VectorXd values) : values_(std::move(values)) {
  for (Eigen::Index k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k])) {
      throw ValidationError("beta coordinate " + std::to_string(k) + " is not finite");
    }
    if (values_[k] == 0.0) {
      throw ValidationError("beta coordinate " + std::to_string(k) + " is zero");
    }
  }
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

double draw_coordinate(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> magnitude(0.5, 1.5);
  std::bernoulli_distribution negative(0.5);
  const double v = magnitude(rng);
  return negative(rng) ? -v : v;
}

BetaVector sample_beta(std::size_t p, std::mt19937_64& rng) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(p));
  for (Eigen::Index k = 0; k < v.size(); ++k) v[k] = draw_coordinate(rng);
  return BetaVector(std::move(v));
}

JacobianEvaluator::JacobianEvaluator(const LatentModel& m, const ParamIndex& idx)
    : z_(design_matrix(m, idx)), observed_cells_(static_cast<Eigen::Index>(m.observed_cells())) {}

Eigen::VectorXd JacobianEvaluator::joint_means(const BetaVector& beta) const {
  if (beta.size() != z_.cols()) {
    throw DimensionMismatch("beta has " + std::to_string(beta.size()) + " coordinates, model has " +
                            std::to_string(z_.cols()));
  }
  const Eigen::VectorXd eta = z_ * beta.values();
  if (eta.cwiseAbs().maxCoeff() > kSafeExponent) {
    throw Overflow("linear predictor exceeds " + std::to_string(kSafeExponent) + "; rescale beta");
  }
  return eta.array().exp().matrix();
}

Eigen::VectorXd JacobianEvaluator::observed_means(const BetaVector& beta) const {
  const Eigen::VectorXd mu = joint_means(beta);
  return mu.head(observed_cells_) + mu.tail(observed_cells_);
}

Eigen::MatrixXd JacobianEvaluator::jacobian(const BetaVector& beta) const {
  // L R Z: scale the rows of Z by μ_X, then add the two latent halves.
  const Eigen::MatrixXd rz = joint_means(beta).asDiagonal() * z_;
  return rz.topRows(observed_cells_) + rz.bottomRows(observed_cells_);
}

Eigen::MatrixXd jacobian(const LatentModel& m, const ParamIndex& idx, const BetaVector& beta) {
  return JacobianEvaluator(m, idx).jacobian(beta);
}

namespace {

Eigen::MatrixXd equilibrated(Eigen::MatrixXd a) {
  // A few sweeps of alternating row and column max-norm scaling.
  for (int sweep = 0; sweep < 4; ++sweep) {
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      const double s = a.row(r).cwiseAbs().maxCoeff();
      if (s > 0.0) a.row(r) /= s;
    }
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      const double s = a.col(c).cwiseAbs().maxCoeff();
      if (s > 0.0) a.col(c) /= s;
    }
  }
  return a;
}

}  // namespace

RankReport numeric_rank(const Eigen::MatrixXd& mat, const RankOptions& options) {
  RankReport out;
  out.columns = static_cast<std::size_t>(mat.cols());
  out.gap = std::numeric_limits<double>::infinity();
  if (mat.size() == 0) return out;

  const Eigen::MatrixXd work = options.equilibrate ? equilibrated(mat) : mat;
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(work);
  const Eigen::VectorXd& sv = svd.singularValues();
  out.singular_values.assign(sv.data(), sv.data() + sv.size());

  const double sigma_max = sv.size() > 0 ? sv[0] : 0.0;
  const double rel = options.relative_tolerance.value_or(
      static_cast<double>(std::max(mat.rows(), mat.cols())) * std::numeric_limits<double>::epsilon());
  out.tolerance_used = rel * sigma_max;
  out.rank = static_cast<int>(std::count_if(out.singular_values.begin(), out.singular_values.end(),
                                            [&](double s) { return s > out.tolerance_used; }));
  const auto r = static_cast<std::size_t>(out.rank);
  if (r > 0 && r < out.singular_values.size()) {
    const double next = out.singular_values[r];
    out.gap = next > 0.0 ? out.singular_values[r - 1] / next : std::numeric_limits<double>::infinity();
  }
  out.ambiguous = out.gap < options.min_gap;
  return out;
}

bool SampledRank::uniform() const {
  return std::adjacent_find(ranks.begin(), ranks.end(), std::not_equal_to<>()) == ranks.end();
}

int SampledRank::min_rank() const { return ranks.empty() ? 0 : *std::min_element(ranks.begin(), ranks.end()); }

namespace {

template <typename Draw>
SampledRank sample_ranks(const LatentModel& m, int trials, std::uint64_t seed, const RankOptions& options,
                         Draw&& draw) {
  if (trials < 1) throw ValidationError("at least one trial is required");
  const ParamIndex idx = build_param_index(m);
  const JacobianEvaluator eval(m, idx);
  SampledRank out;
  out.seed = seed;
  out.parameter_count = idx.size();
  std::map<int, int> counts;
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_engine(seed, static_cast<std::uint64_t>(t));
    const BetaVector beta = draw(idx, rng);
    RankReport report = numeric_rank(eval.jacobian(beta), options);
    if (report.ambiguous) ++out.ambiguous_trials;
    out.ranks.push_back(report.rank);
    ++counts[report.rank];
    if (t == 0 || report.rank > out.max_rank) {
      out.max_rank = report.rank;
      out.best = std::move(report);
    }
  }
  // Most frequent rank; ties go to the larger value.
  int best_count = 0;
  for (auto [rank, count] : counts) {
    if (count >= best_count) {
      best_count = count;
      out.modal_rank = rank;
    }
  }
  return out;
}

}  // namespace

SampledRank generic_rank(const LatentModel& m, int trials, std::uint64_t seed, const RankOptions& options) {
  return sample_ranks(m, trials, seed, options, [](const ParamIndex& idx, std::mt19937_64& rng) {
    return sample_beta(idx.size(), rng);
  });
}

SampledRank rank_on_system(const LatentModel& m, const SingularSystem& sys, int trials, std::uint64_t seed,
                           const RankOptions& options) {
  return sample_ranks(m, trials, seed, options, [&](const ParamIndex& idx, std::mt19937_64& rng) {
    return sample_on_subspace(sys, idx, rng);
  });
}

}  // namespace latentid
