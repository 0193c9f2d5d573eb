#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "numrad/matrix.hpp"

namespace numrad {

inline constexpr double kDefaultEigenTolerance = 1e-12;
inline constexpr int kMaxJacobiSweeps = 100;

/// H = V diag(eigenvalues) V*, eigenvalues ascending.
struct HermitianEigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;  // columns are orthonormal eigenvectors
  double residual = 0.0;       // ||H V - V diag(eigenvalues)||_F
};

/// Cyclic complex Jacobi diagonalization. The input must be Hermitian within
/// 1e-10 ||H||_F; it is symmetrized before the sweeps. Sweeps stop once the
/// off-diagonal Frobenius mass is <= tol (1 + ||H||_F).
///
/// Throws NotHermitian, or NonConvergence after kMaxJacobiSweeps sweeps.
HermitianEigenDecomposition hermitian_eig(const ComplexMatrix& h,
                                          double tol = kDefaultEigenTolerance);

/// Eigenvalues only (ascending). Same solver, no eigenvector accumulation.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h,
                                          double tol = kDefaultEigenTolerance);

/// Singular values of a Hermitian matrix (absolute eigenvalues), descending.
std::vector<double> hermitian_singular_values(const ComplexMatrix& h);

/// Descending singular values from the eigenvalues of A*A.
std::vector<double> singular_values(const ComplexMatrix& a);

/// |A| = (A*A)^{1/2}.
ComplexMatrix matrix_abs(const ComplexMatrix& a);

/// Applies the PSD clamp: values in [-1e-10 (1 + max), 0) become zero, more
/// negative values raise DomainError.
std::vector<double> clamp_psd(std::span<const double> eigenvalues);

/// V diag(values) V* for the eigenvectors of `basis`.
ComplexMatrix reconstruct(const HermitianEigenDecomposition& basis, std::span<const double> values);

/// sum_j values[j] |<x, v_j>|^2, i.e. <V diag(values) V* x, x> without forming the matrix.
double spectral_quadratic_form(const HermitianEigenDecomposition& basis,
                               std::span<const double> values, std::span<const Complex> x);

/// f(H) through the eigendecomposition of H. When `domain_lower` is finite the
/// spectrum must lie in [domain_lower, inf); for domain_lower == 0 the PSD
/// clamp is applied first. Non-finite f values raise DomainError.
ComplexMatrix apply_spectral_function(const ComplexMatrix& h, const std::function<double(double)>& f,
                                      double domain_lower = -std::numeric_limits<double>::infinity());

/// H^p for PSD H (clamped) and real p > 0.
ComplexMatrix matrix_power(const ComplexMatrix& h, double p);

/// One summand weight * V diag(values) V* of a PSD sum; values must be >= 0.
struct PsdTerm {
  double weight = 1.0;
  const HermitianEigenDecomposition* basis = nullptr;
  std::vector<double> values;
};

/// Eigenvalues (ascending) of sum_k weight_k V_k diag(values_k) V_k*.
///
/// The sum is written as G* G with G stacked from rows sqrt(w d_j) v_j*;
/// Householder QR with row sorting and column pivoting followed by one-sided
/// Jacobi on the triangular factor keeps small eigenvalues to high relative
/// accuracy, which plain diagonalization of the formed sum cannot.
std::vector<double> psd_sum_eigenvalues(std::span<const PsdTerm> terms);

}  // namespace numrad
