#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "../oracles.hpp"
#include "numrad/ensemble.hpp"
#include "numrad/errors.hpp"
#include "numrad/radius.hpp"

using namespace numrad;
using namespace std::complex_literals;

TEST(NumericalRadius, UpperTriangularWorkedExample) {
  const ComplexMatrix t{{2, 1}, {0, 1}};
  const auto r = numerical_radius(t);
  EXPECT_NEAR(r.value * r.value, (11 + 6 * std::sqrt(2.0)) / 4, 1e-9);
  EXPECT_LE(r.certified_error, 1e-10);
  EXPECT_GT(r.evaluations, 0u);
}

TEST(NumericalRadius, IdentityAndScalarMultiples) {
  EXPECT_NEAR(numerical_radius(ComplexMatrix::identity(3)).value, 1.0, 1e-12);
  EXPECT_NEAR(numerical_radius((-2.0 + 1i) * ComplexMatrix::identity(2)).value, std::sqrt(5.0), 1e-10);
}

TEST(NumericalRadius, NilpotentRangeIsADisk) {
  // W([[0, c], [0, 0]]) is the closed disk of radius |c|/2.
  const auto r = numerical_radius(ComplexMatrix{{0, 4}, {0, 0}});
  EXPECT_NEAR(r.value, 2.0, 1e-10);
  EXPECT_LE(r.certified_error, 1e-10);
}

TEST(NumericalRadius, NormalMatrixEqualsSpectralRadius) {
  Rng rng(12);
  const auto u = sample_haar_unitary(5, rng);
  const Complex z[] = {1.0 + 1i, -2.0, 0.5i, 1.5 - 0.5i, -0.1};
  const auto t = matmul(matmul(u, ComplexMatrix::diagonal(std::span<const Complex>(z))), adjoint(u));
  EXPECT_NEAR(numerical_radius(t).value, 2.0, 1e-10);
}

TEST(NumericalRadius, AgreesWithIndependentGridSearch) {
  Rng rng(99);
  for (int rep = 0; rep < 12; ++rep) {
    const std::size_t n = 2 + rep % 5;
    const auto t = sample_ginibre(n, rng);
    const auto r = numerical_radius(t);
    const double ref = oracle::grid_radius(oracle::to_eigen(t), 2048);
    EXPECT_NEAR(r.value, ref, 1e-9) << "n=" << n;
    EXPECT_LE(r.certified_error, 1e-10);
    EXPECT_NEAR(rotation_profile(t, r.theta_star, MaxEig{}), r.value, 1e-9);
  }
}

TEST(NumericalRadius, ClassicalBoundsHold) {
  Rng rng(31);
  for (int rep = 0; rep < 20; ++rep) {
    const auto t = sample_ginibre(4, rng);
    const double w = numerical_radius(t).value;
    const double nrm = oracle::op_norm(oracle::to_eigen(t));
    EXPECT_LE(0.5 * nrm, w + 1e-10);
    EXPECT_LE(w, nrm + 1e-10);
  }
}

TEST(NumericalRadius, RejectsNonPositiveTolerance) {
  EXPECT_THROW(numerical_radius(ComplexMatrix::identity(2), 0.0), InvalidArgument);
  EXPECT_THROW(generalized_numerical_radius(ComplexMatrix::identity(2), NormSpec::trace(), -1.0), InvalidArgument);
}

TEST(NumericalRadius, UnreachableToleranceReportsNonConvergence) {
  EXPECT_THROW(numerical_radius(ComplexMatrix{{0, 1}, {0, 0}}, 1e-300), NonConvergence);
}

TEST(RotationProfile, MatchesReferenceEigenvalues) {
  Rng rng(1);
  const auto t = sample_ginibre(4, rng);
  const auto ref = oracle::to_eigen(t);
  for (double theta : {0.0, 0.7, 2.0, 5.5}) {
    EXPECT_NEAR(rotation_profile(t, theta, MaxEig{}), oracle::profile(ref, theta), 1e-12);
    const oracle::Mat rot = std::polar(1.0, theta) * ref;
    const auto sv = oracle::singular_values((rot + rot.adjoint()) / 2.0);
    double trace = 0;
    for (double s : sv) trace += s;
    EXPECT_NEAR(rotation_profile(t, theta, NormSpec::trace()), trace, 1e-12);
  }
}

TEST(GeneralizedRadius, OperatorNormRecoversClassicalRadius) {
  Rng rng(77);
  for (int rep = 0; rep < 10; ++rep) {
    const auto t = sample_ginibre(2 + rep % 5, rng);
    EXPECT_NEAR(generalized_numerical_radius(t, NormSpec::operator_norm()).value, numerical_radius(t).value, 2e-10);
  }
}

TEST(GeneralizedRadius, NilpotentOperatorNormProfileIsConstant) {
  const auto r = generalized_numerical_radius(ComplexMatrix{{0, 4}, {0, 0}}, NormSpec::operator_norm());
  EXPECT_NEAR(r.value, 2.0, 1e-10);
}

TEST(GeneralizedRadius, AgreesWithDenseGridForEveryNorm) {
  Rng rng(5);
  const auto t = sample_ginibre(4, rng);
  const auto ref = oracle::to_eigen(t);
  for (const auto& spec : {NormSpec::trace(), NormSpec::frobenius(), NormSpec::schatten(4), NormSpec::ky_fan(2)}) {
    double best = 0;
    for (int i = 0; i < 20000; ++i) {
      const oracle::Mat rot = std::polar(1.0, std::numbers::pi * i / 20000) * ref;
      const auto sv = oracle::singular_values((rot + rot.adjoint()) / 2.0);
      best = std::max(best, spec.from_singular_values(sv));
    }
    const auto r = generalized_numerical_radius(t, spec);
    EXPECT_GE(r.value + 1e-9, best) << spec.to_string();
    EXPECT_LE(r.value - best, 1e-6) << spec.to_string();  // grid spacing pi/20000
    EXPECT_LE(r.certified_error, 1e-10);
  }
}

TEST(RadiusOracle, IsALowerBoundThatConverges) {
  Rng rng(44);
  for (int rep = 0; rep < 10; ++rep) {
    const auto t = sample_ginibre(2 + rep % 5, rng);
    const auto r = numerical_radius(t);
    const double lower = numerical_radius_oracle(t, 16, 60, 1234 + rep);
    EXPECT_LE(lower, r.value + r.certified_error + 1e-12);
    EXPECT_NEAR(lower, r.value, 1e-6);
  }
  EXPECT_THROW(numerical_radius_oracle(ComplexMatrix::identity(2), 0, 10, 1), InvalidArgument);
}

TEST(RadiusOracle, DeterministicForSeed) {
  Rng rng(3);
  const auto t = sample_ginibre(3, rng);
  EXPECT_EQ(numerical_radius_oracle(t, 4, 5, 9), numerical_radius_oracle(t, 4, 5, 9));
}
