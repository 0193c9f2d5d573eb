#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace numrad {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense n x n complex matrix stored row-major. Immutable after construction;
/// every entry is finite.
class ComplexMatrix {
 public:
  /// Zero matrix of dimension n (n >= 1).
  explicit ComplexMatrix(std::size_t n);
  /// Takes ownership of n*n row-major entries. Throws InvalidArgument on a
  /// size mismatch or a non-finite entry.
  ComplexMatrix(std::size_t n, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::span<const double> diag);

  std::size_t size() const noexcept { return n_; }
  Complex operator()(std::size_t row, std::size_t col) const noexcept {
    return entries_[row * n_ + col];
  }
  std::span<const Complex> entries() const noexcept { return entries_; }

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t n_;
  std::vector<Complex> entries_;
};

/// A vector of Euclidean norm one (within 1e-12).
class UnitVector {
 public:
  /// Throws InvalidArgument unless the norm is within 1e-12 of one.
  explicit UnitVector(ComplexVector components);
  /// Rescales a non-zero vector to unit length.
  static UnitVector normalized(ComplexVector v);
  /// The k-th standard basis vector of C^n.
  static UnitVector basis(std::size_t n, std::size_t k);

  std::size_t size() const noexcept { return components_.size(); }
  const ComplexVector& components() const noexcept { return components_; }
  Complex operator[](std::size_t i) const noexcept { return components_[i]; }

 private:
  ComplexVector components_;
};

ComplexMatrix adjoint(const ComplexMatrix& m);
/// Row-by-column product with a fixed left-to-right summation order.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
/// (M + M*) / 2, conjugate-symmetric by construction.
ComplexMatrix real_part(const ComplexMatrix& m);
/// (M - M*) / (2i), so that M = real_part(M) + i * imag_part(M).
ComplexMatrix imag_part(const ComplexMatrix& m);

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& m);
ComplexMatrix operator*(double s, const ComplexMatrix& m);

double frobenius_norm(const ComplexMatrix& m);
/// Frobenius norm of M - M*.
double hermitian_defect(const ComplexMatrix& m);

/// Inner product linear in the first argument: <x, y> = sum_i x_i conj(y_i).
Complex inner(std::span<const Complex> x, std::span<const Complex> y);
double norm(std::span<const Complex> x);
ComplexVector matvec(const ComplexMatrix& m, std::span<const Complex> x);
/// <Mx, x>.
Complex quadratic_form(const ComplexMatrix& m, std::span<const Complex> x);
inline Complex quadratic_form(const ComplexMatrix& m, const UnitVector& x) {
  return quadratic_form(m, x.components());
}

}  // namespace numrad
