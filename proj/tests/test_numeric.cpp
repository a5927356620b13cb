#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "support.hpp"

namespace latentid {
namespace {

using testing::fixture;

Eigen::VectorXd filled(Eigen::Index n, double v) { return Eigen::VectorXd::Constant(n, v); }

TEST(BetaVector, RejectsZeroAndNonFinite) {
  EXPECT_NO_THROW(BetaVector(filled(3, 0.7)));
  Eigen::VectorXd v = filled(3, 0.7);
  v[1] = 0.0;
  EXPECT_THROW(BetaVector{v}, ValidationError);
  v[1] = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(BetaVector{v}, ValidationError);
  v[1] = std::numeric_limits<double>::infinity();
  EXPECT_THROW(BetaVector{v}, ValidationError);
}

TEST(Sampling, LawAndStreams) {
  auto rng = trial_engine(0, 0);
  for (int k = 0; k < 10000; ++k) {
    const double x = std::abs(draw_coordinate(rng));
    EXPECT_GE(x, 0.5);
    EXPECT_LE(x, 1.5);
  }
  auto a = trial_engine(5, 2);
  auto b = trial_engine(5, 2);
  auto c = trial_engine(5, 3);
  const auto first = a();
  EXPECT_EQ(first, b());
  EXPECT_NE(first, c());
}

TEST(Jacobian, MatchesFiniteDifferencesOnFixtures) {
  for (const auto& name : testing::fixture_names()) {
    const LatentModel m = fixture(name);
    const ParamIndex idx = build_param_index(m);
    const JacobianEvaluator eval(m, idx);
    const testing::ReferenceMeans mu(m, idx);
    double worst = 0.0;
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
      auto rng = trial_engine(101, trial);
      const BetaVector beta = sample_beta(idx.size(), rng);
      const Eigen::MatrixXd d = eval.jacobian(beta);
      ASSERT_EQ(static_cast<std::size_t>(d.rows()), m.observed_cells());
      ASSERT_EQ(static_cast<std::size_t>(d.cols()), idx.size());
      EXPECT_LE((eval.observed_means(beta) - mu(beta.values())).cwiseAbs().maxCoeff(),
                1e-12 * mu(beta.values()).cwiseAbs().maxCoeff());
      worst = std::max(worst, testing::finite_difference_error(mu, d, beta.values()));
    }
    EXPECT_LE(worst, 1e-6) << name;
  }
}

TEST(Jacobian, MatchesFiniteDifferencesWithLevels) {
  const LatentModel base = fixture("figure1");
  std::vector<int> levels = base.levels();
  levels[1] = 3;
  levels[4] = 4;
  const LatentModel m(base.graph(), levels);
  const ParamIndex idx = build_param_index(m);
  const testing::ReferenceMeans mu(m, idx);
  for (std::uint64_t trial = 0; trial < 5; ++trial) {
    auto rng = trial_engine(3, trial);
    const BetaVector beta = sample_beta(idx.size(), rng);
    EXPECT_LE(testing::finite_difference_error(mu, jacobian(m, idx, beta), beta.values()), 1e-6);
  }
}

TEST(Jacobian, ExplicitProduct) {
  const LatentModel m = fixture("figure3");
  const ParamIndex idx = build_param_index(m);
  auto rng = trial_engine(1, 0);
  const BetaVector beta = sample_beta(idx.size(), rng);
  const Eigen::MatrixXd z = design_matrix(m, idx);
  const Eigen::VectorXd r = (z * beta.values()).array().exp();
  const Eigen::MatrixXd expected = marginalization_matrix(m) * r.asDiagonal() * z;
  EXPECT_TRUE(jacobian(m, idx, beta).isApprox(expected, 1e-13));
}

TEST(Jacobian, SmallBetaApproachesLZ) {
  const LatentModel m = fixture("figure5");
  const ParamIndex idx = build_param_index(m);
  const BetaVector beta(filled(static_cast<Eigen::Index>(idx.size()), 1e-9));
  const Eigen::MatrixXd lz = marginalization_matrix(m) * design_matrix(m, idx);
  EXPECT_LE((jacobian(m, idx, beta) - lz).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(Jacobian, SaturatedPairHasRankTwo) {
  const LatentModel m(Graph(2, {{0, 1}}));
  const ParamIndex idx = build_param_index(m);
  auto rng = trial_engine(0, 0);
  const Eigen::MatrixXd d = jacobian(m, idx, sample_beta(idx.size(), rng));
  EXPECT_EQ(d.rows(), 2);
  EXPECT_EQ(d.cols(), 4);
  EXPECT_EQ(numeric_rank(d).rank, 2);
}

TEST(Jacobian, OverflowAndDimension) {
  const LatentModel m = fixture("figure3");
  const ParamIndex idx = build_param_index(m);
  EXPECT_THROW(jacobian(m, idx, BetaVector(filled(static_cast<Eigen::Index>(idx.size()), 100.0))), Overflow);
  EXPECT_THROW(jacobian(m, idx, BetaVector(filled(5, 1.0))), DimensionMismatch);
}

TEST(NumericRank, SmallMatrices) {
  EXPECT_EQ(numeric_rank(Eigen::MatrixXd::Identity(5, 5)).rank, 5);
  const Eigen::VectorXd u = Eigen::VectorXd::LinSpaced(10, 1.0, 10.0);
  const Eigen::VectorXd v = Eigen::VectorXd::LinSpaced(10, -2.0, 3.0);
  const RankReport r1 = numeric_rank(u * v.transpose());
  EXPECT_EQ(r1.rank, 1);
  EXPECT_EQ(r1.singular_values.size(), 10U);
  EXPECT_FALSE(r1.ambiguous);
  EXPECT_EQ(numeric_rank(Eigen::MatrixXd::Zero(3, 4)).rank, 0);
}

TEST(NumericRank, CountsValuesAboveTolerance) {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index rows = 3 + trial % 7;
    const Eigen::Index cols = 2 + trial % 5;
    const Eigen::Index k = std::min<Eigen::Index>(1 + trial % 4, std::min(rows, cols));
    Eigen::MatrixXd a(rows, k);
    Eigen::MatrixXd b(k, cols);
    for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = gauss(rng);
    for (Eigen::Index i = 0; i < b.size(); ++i) b.data()[i] = gauss(rng);
    for (bool eq : {true, false}) {
      RankOptions opts;
      opts.equilibrate = eq;
      const RankReport r = numeric_rank(a * b, opts);
      EXPECT_EQ(r.rank, k);
      EXPECT_LE(r.rank, std::min(rows, cols));
      const auto above = std::count_if(r.singular_values.begin(), r.singular_values.end(),
                                       [&](double s) { return s > r.tolerance_used; });
      EXPECT_EQ(above, r.rank);
      EXPECT_TRUE(std::is_sorted(r.singular_values.rbegin(), r.singular_values.rend()));
    }
  }
}

TEST(NumericRank, GapRuleAndOverride) {
  RankOptions raw;
  raw.equilibrate = false;
  const Eigen::Vector3d diag(1.0, 1e-15, 1e-16);
  const RankReport close = numeric_rank(diag.asDiagonal().toDenseMatrix(), raw);
  EXPECT_EQ(close.rank, 2);
  EXPECT_TRUE(close.ambiguous);
  EXPECT_NEAR(close.gap, 10.0, 1e-9);

  const Eigen::Vector3d clear(1.0, 1e-2, 1e-17);
  const RankReport separated = numeric_rank(clear.asDiagonal().toDenseMatrix(), raw);
  EXPECT_EQ(separated.rank, 2);
  EXPECT_FALSE(separated.ambiguous);

  raw.relative_tolerance = 1e-1;
  EXPECT_EQ(numeric_rank(clear.asDiagonal().toDenseMatrix(), raw).rank, 1);
}

TEST(GenericRank, Fixtures) {
  struct Case {
    const char* name;
    int rank;
  };
  for (const Case& c : {Case{"figure1", 20}, Case{"figure2a", 14}, Case{"figure3", 28}, Case{"figure5", 40}}) {
    const SampledRank r = generic_rank(fixture(c.name), 50, 0);
    EXPECT_EQ(r.max_rank, c.rank) << c.name;
    EXPECT_TRUE(r.uniform()) << c.name;
    EXPECT_EQ(r.ambiguous_trials, 0) << c.name;
    EXPECT_EQ(r.ranks.size(), 50U);
  }
}

TEST(GenericRank, NotIdentifiedStaysDeficient) {
  for (const LatentModel& m : {fixture("figure2b"), make_star_model(3, {{1, 2}, {1, 3}, {2, 3}}),
                               make_star_model(2, {})}) {
    const SampledRank r = generic_rank(m, 100, 4);
    EXPECT_LT(r.max_rank, static_cast<int>(r.parameter_count));
  }
}

TEST(GenericRank, LatentClassModels) {
  const SampledRank three = generic_rank(make_star_model(3, {}), 20, 0);
  EXPECT_EQ(three.parameter_count, 8U);
  EXPECT_EQ(three.max_rank, 8);
  EXPECT_EQ(generic_rank(make_star_model(4, {}), 20, 0).max_rank, 10);
  EXPECT_EQ(generic_rank(make_star_model(2, {}), 20, 0).max_rank, 4);
}

TEST(GenericRank, Deterministic) {
  const LatentModel m = fixture("figure3");
  const SampledRank a = generic_rank(m, 10, 42);
  const SampledRank b = generic_rank(m, 10, 42);
  EXPECT_EQ(a.ranks, b.ranks);
  EXPECT_EQ(a.best.singular_values, b.best.singular_values);
  EXPECT_THROW(generic_rank(m, 0, 0), ValidationError);
}

TEST(GenericRank, IdentifiedModelsAtManyPoints) {
  for (const char* name : {"figure1", "figure2a", "figure4"}) {
    const LatentModel m = fixture(name);
    const ParamIndex idx = build_param_index(m);
    const JacobianEvaluator eval(m, idx);
    int full = 0;
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
      auto rng = trial_engine(777, trial);
      if (numeric_rank(eval.jacobian(sample_beta(idx.size(), rng))).rank == static_cast<int>(idx.size())) ++full;
    }
    EXPECT_EQ(full, 200) << name;
  }
}

TEST(GenericRank, InvariantUnderColumnPermutation) {
  const LatentModel m = fixture("figure5");
  const ParamIndex idx = build_param_index(m);
  std::vector<std::size_t> perm(idx.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 shuffle_rng(5);
  std::shuffle(perm.begin(), perm.end(), shuffle_rng);
  std::vector<ParamKey> shuffled;
  for (std::size_t k : perm) shuffled.push_back(idx.entry(k));
  const ParamIndex shuffled_idx(shuffled);
  const SingularSystem sys = full_system(m);
  for (std::uint64_t trial = 0; trial < 10; ++trial) {
    for (bool on_locus : {false, true}) {
      auto rng = trial_engine(8, trial);
      const BetaVector beta = on_locus ? sample_on_subspace(sys, idx, rng) : sample_beta(idx.size(), rng);
      Eigen::VectorXd permuted(beta.size());
      for (std::size_t k = 0; k < perm.size(); ++k) permuted[static_cast<Eigen::Index>(k)] = beta[static_cast<Eigen::Index>(perm[k])];
      EXPECT_EQ(numeric_rank(jacobian(m, idx, beta)).rank,
                numeric_rank(jacobian(m, shuffled_idx, BetaVector(permuted))).rank);
    }
  }
}

TEST(RankOnSystem, Figure3ModelDropsByOne) {
  const LatentModel m = fixture("figure3");
  const SampledRank r = rank_on_system(m, full_system(m), 50, 0);
  EXPECT_EQ(r.max_rank, 27);
  EXPECT_TRUE(r.uniform());
}

TEST(RankOnSystem, Figure5ModelFullSystem) {
  const LatentModel m = fixture("figure5");
  EXPECT_EQ(rank_on_system(m, full_system(m), 50, 0).max_rank, 30);
}

TEST(RankOnSystem, EmptySystemMatchesGeneric) {
  const LatentModel m = fixture("figure3");
  const SampledRank on = rank_on_system(m, SingularSystem{}, 20, 6);
  const SampledRank gen = generic_rank(m, 20, 6);
  EXPECT_EQ(on.max_rank, gen.max_rank);
  EXPECT_EQ(on.ranks, gen.ranks);
}

}  // namespace
}  // namespace latentid
