#include <gtest/gtest.h>

#include <cmath>

#include "../oracles.hpp"
#include "numrad/ensemble.hpp"
#include "numrad/errors.hpp"
#include "numrad/spectral.hpp"

using namespace numrad;
using namespace std::complex_literals;

namespace {

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) { return real_part(sample_ginibre(n, rng)); }

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST(HermitianEig, TwoByTwoClosedForm) {
  // [[a, b], [conj b, d]]: (a+d)/2 +- sqrt(((a-d)/2)^2 + |b|^2)
  const ComplexMatrix h{{3, 1.0 + 2i}, {1.0 - 2i, -1}};
  const auto ev = hermitian_eigenvalues(h);
  const double c = 1.0, r = std::sqrt(4.0 + 5.0);
  EXPECT_NEAR(ev[0], c - r, 1e-14);
  EXPECT_NEAR(ev[1], c + r, 1e-14);
}

TEST(HermitianEig, AgreesWithReferenceSolver) {
  Rng rng(11);
  for (std::size_t n = 1; n <= 9; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto h = random_hermitian(n, rng);
      const auto d = hermitian_eig(h);
      EXPECT_LT(max_abs_diff(d.eigenvalues, oracle::eigenvalues(oracle::to_eigen(h))), 1e-12) << n;
      EXPECT_LT(d.residual, 1e-12 * (1 + frobenius_norm(h)));
      EXPECT_TRUE(std::is_sorted(d.eigenvalues.begin(), d.eigenvalues.end()));
      const auto v = oracle::to_eigen(d.eigenvectors);
      EXPECT_LT((v.adjoint() * v - oracle::Mat::Identity(n, n)).norm(), 1e-12);
    }
  }
}

TEST(HermitianEig, RepeatedEigenvaluesAndDiagonalInput) {
  const auto d = hermitian_eig(ComplexMatrix::identity(4));
  for (double v : d.eigenvalues) EXPECT_EQ(v, 1.0);
  const double diag[] = {3, -2, 3, 0};
  const auto e = hermitian_eigenvalues(ComplexMatrix::diagonal(std::span<const double>(diag)));
  EXPECT_EQ(e, (std::vector<double>{-2, 0, 3, 3}));
}

TEST(HermitianEig, RejectsNonHermitian) {
  EXPECT_THROW(hermitian_eig(ComplexMatrix{{1, 2}, {0, 1}}), NotHermitian);
  EXPECT_THROW(hermitian_eig(ComplexMatrix{{1i, 0}, {0, 1}}), NotHermitian);
}

TEST(SingularValues, AgreeWithReferenceSvd) {
  Rng rng(5);
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto a = sample_ginibre(n, rng);
    EXPECT_LT(max_abs_diff(singular_values(a), oracle::singular_values(oracle::to_eigen(a))), 1e-12);
  }
  const auto sv = singular_values(ComplexMatrix{{0, 4}, {0, 0}});
  EXPECT_NEAR(sv[0], 4.0, 1e-14);
  EXPECT_NEAR(sv[1], 0.0, 1e-14);
}

TEST(MatrixAbs, SquaresToGramMatrix) {
  Rng rng(9);
  const auto a = sample_ginibre(5, rng);
  const auto abs = matrix_abs(a);
  EXPECT_LT(frobenius_norm(matmul(abs, abs) - matmul(adjoint(a), a)), 1e-12);
  const auto ev = hermitian_eigenvalues(abs);
  EXPECT_GE(ev.front(), -1e-14);
}

TEST(ClampPsd, ZeroesRoundingNoiseOnly) {
  const std::vector<double> noisy{-1e-12, 0.5, 2.0};
  const auto c = clamp_psd(noisy);
  EXPECT_EQ(c[0], 0.0);
  EXPECT_EQ(c[2], 2.0);
  const std::vector<double> negative{-1e-3, 1.0};
  EXPECT_THROW(clamp_psd(negative), DomainError);
}

TEST(SpectralFunction, MatchesReferenceFunctionalCalculus) {
  Rng rng(3);
  const auto h = sample_hermitian_psd(4, rng);
  const auto root = matrix_power(h, 0.5);
  EXPECT_LT(frobenius_norm(matmul(root, root) - h), 1e-11 * frobenius_norm(h));
  const auto cube = apply_spectral_function(h, [](double x) { return x * x * x; }, 0.0);
  const auto ref = oracle::spectral(oracle::to_eigen(h), [](double x) { return x * x * x; });
  EXPECT_LT((oracle::to_eigen(cube) - ref).norm(), 1e-10 * ref.norm());
}

TEST(SpectralFunction, DomainViolationsThrow) {
  const ComplexMatrix h{{-1, 0}, {0, 1}};
  EXPECT_THROW(matrix_power(h, 0.5), DomainError);
  EXPECT_THROW(apply_spectral_function(h, [](double x) { return std::log(x + 1); }, 0.0), DomainError);
  EXPECT_THROW(apply_spectral_function(ComplexMatrix{{800, 0}, {0, 1}}, [](double x) { return std::exp(x); }),
               DomainError);
}

TEST(SpectralQuadraticForm, EqualsFormOfReconstruction) {
  Rng rng(21);
  const auto h = random_hermitian(5, rng);
  const auto d = hermitian_eig(h);
  std::vector<double> values(5);
  for (std::size_t i = 0; i < 5; ++i) values[i] = std::exp(d.eigenvalues[i]);
  const auto x = random_unit_vector(5, rng);
  const double direct = quadratic_form(reconstruct(d, values), x).real();
  EXPECT_NEAR(spectral_quadratic_form(d, values, x.components()), direct, 1e-13 * (1 + std::abs(direct)));
}

TEST(PsdSum, MatchesReferenceOnGenericTerms) {
  Rng rng(4);
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto p = sample_hermitian_psd(n, rng);
    const auto q = sample_hermitian_psd(n, rng);
    const auto dp = hermitian_eig(p);
    const auto dq = hermitian_eig(q);
    const PsdTerm terms[] = {{0.3, &dp, clamp_psd(dp.eigenvalues)}, {0.7, &dq, clamp_psd(dq.eigenvalues)}};
    const auto ev = psd_sum_eigenvalues(terms);
    const auto ref = oracle::eigenvalues(oracle::to_eigen(0.3 * p + 0.7 * q));
    EXPECT_LT(max_abs_diff(ev, ref), 1e-11 * (1 + ref.back())) << n;
  }
}

TEST(PsdSum, KeepsTinyEigenvaluesToHighRelativeAccuracy) {
  // Two terms on the same Haar basis: the sum has the exactly known spectrum
  // w1 d1 + w2 d2, including eigenvalues far below machine epsilon.
  Rng rng(8);
  const auto u = sample_haar_unitary(4, rng);
  const std::vector<double> zero(4, 0.0);
  HermitianEigenDecomposition basis{zero, u, 0.0};
  const std::vector<double> d1{1e-18, 1e-9, 0.3, 1.0};
  const std::vector<double> d2{1e-27, 1e-12, 0.5, 1.0};
  const PsdTerm terms[] = {{0.5, &basis, d1}, {0.5, &basis, d2}};
  const auto ev = psd_sum_eigenvalues(terms);
  for (std::size_t i = 0; i < 4; ++i) {
    const double exact = 0.5 * (d1[i] + d2[i]);
    EXPECT_NEAR(ev[i], exact, 1e-10 * exact) << i;
  }
}
