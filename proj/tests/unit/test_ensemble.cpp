#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "numrad/ensemble.hpp"
#include "numrad/errors.hpp"

using namespace numrad;

TEST(Ensemble, NilpotentOrderTwoSquaresToZeroExactly) {
  const auto samples = generate({EnsembleKind::Nilpotent, 2, 5, 20});
  ASSERT_EQ(samples.size(), 20u);
  for (const auto& t : samples) EXPECT_EQ(matmul(t, t), ComplexMatrix(2));
}

TEST(Ensemble, NilpotentIsStrictlyUpperTriangular) {
  for (const auto& t : generate({EnsembleKind::Nilpotent, 6, 1, 5}))
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j <= i; ++j) EXPECT_EQ(t(i, j), Complex(0));
}

TEST(Ensemble, NormalSamplesCommuteWithAdjoint) {
  for (const auto& t : generate({EnsembleKind::Normal, 6, 3, 20})) {
    const auto comm = matmul(adjoint(t), t) - matmul(t, adjoint(t));
    const double f = frobenius_norm(t);
    EXPECT_LE(frobenius_norm(comm), 1e-10 * f * f);
  }
}

TEST(Ensemble, HaarSamplesAreUnitary) {
  for (const auto& u : generate({EnsembleKind::HaarUnitary, 7, 9, 10})) {
    const auto m = oracle::to_eigen(u);
    EXPECT_LT((m.adjoint() * m - oracle::Mat::Identity(7, 7)).norm(), 1e-13);
  }
}

TEST(Ensemble, PsdSamplesArePositiveSemidefinite) {
  for (const auto& p : generate({EnsembleKind::HermitianPSD, 5, 4, 10})) {
    EXPECT_EQ(hermitian_defect(p), 0.0);
    EXPECT_GE(oracle::eigenvalues(oracle::to_eigen(p)).front(), -1e-12);
  }
}

TEST(Ensemble, GinibreEntriesHaveUnitVariance) {
  Rng rng(123);
  double sum = 0;
  const int count = 200;
  for (int i = 0; i < count; ++i) {
    const auto g = sample_ginibre(8, rng);
    for (auto z : g.entries()) sum += std::norm(z);
  }
  EXPECT_NEAR(sum / (count * 64.0), 1.0, 0.03);
}

TEST(Ensemble, SameSeedSameMatrices) {
  const EnsembleSpec spec{EnsembleKind::Ginibre, 4, 77, 3};
  EXPECT_EQ(generate(spec), generate(spec));
  EnsembleSpec other = spec;
  other.seed = 78;
  EXPECT_NE(generate(spec), generate(other));
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
}

TEST(Ensemble, RejectsEmptySpecs) {
  EXPECT_THROW(generate({EnsembleKind::Ginibre, 0, 1, 1}), InvalidArgument);
  EXPECT_THROW(generate({EnsembleKind::Ginibre, 2, 1, 0}), InvalidArgument);
}

TEST(Ensemble, NamesRoundTrip) {
  for (auto k : {EnsembleKind::Ginibre, EnsembleKind::Normal, EnsembleKind::Nilpotent, EnsembleKind::HaarUnitary,
                 EnsembleKind::HermitianPSD})
    EXPECT_EQ(parse_ensemble_kind(to_string(k)), k);
  EXPECT_THROW(parse_ensemble_kind("Wishart"), InvalidArgument);
}

TEST(Ensemble, RandomUnitVectors) {
  Rng rng(5);
  const auto x = random_unit_vector(6, rng);
  EXPECT_NEAR(norm(x.components()), 1.0, 1e-14);
}
