#include "numrad/matrix.hpp"

#include <cmath>
#include <string>

#include "numrad/errors.hpp"

namespace numrad {
namespace {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_size(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.size() != b.size()) {
    throw DimensionMismatch(std::string(what) + ": dimension mismatch (" + std::to_string(a.size()) +
                            " vs " + std::to_string(b.size()) + ")");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), entries_(n * n) {
  if (n == 0) throw InvalidArgument("matrix dimension must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<Complex> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n == 0) throw InvalidArgument("matrix dimension must be positive");
  if (entries_.size() != n * n) {
    throw InvalidArgument("expected " + std::to_string(n * n) + " entries, got " +
                          std::to_string(entries_.size()));
  }
  for (const Complex& z : entries_) {
    if (!is_finite(z)) throw InvalidArgument("matrix entries must be finite");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : ComplexMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw InvalidArgument("matrix rows must form a square array");
    std::size_t j = 0;
    for (const Complex& z : row) {
      if (!is_finite(z)) throw InvalidArgument("matrix entries must be finite");
      entries_[i * n_ + j++] = z;
    }
    ++i;
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
  return ComplexMatrix(n, std::move(e));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  const std::size_t n = diag.size();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = diag[i];
  return ComplexMatrix(n, std::move(e));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  const std::size_t n = diag.size();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = diag[i];
  return ComplexMatrix(n, std::move(e));
}

UnitVector::UnitVector(ComplexVector components) : components_(std::move(components)) {
  if (components_.empty()) throw InvalidArgument("unit vector must be non-empty");
  const double nrm = norm(components_);
  if (!(std::abs(nrm - 1.0) <= 1e-12)) {
    throw InvalidArgument("vector is not of unit norm (norm = " + std::to_string(nrm) + ")");
  }
}

UnitVector UnitVector::normalized(ComplexVector v) {
  const double nrm = norm(v);
  if (!(nrm > 0.0) || !std::isfinite(nrm)) {
    throw InvalidArgument("cannot normalize a zero or non-finite vector");
  }
  for (Complex& z : v) z /= nrm;
  return UnitVector(std::move(v));
}

UnitVector UnitVector::basis(std::size_t n, std::size_t k) {
  if (k >= n) throw InvalidArgument("basis index out of range");
  ComplexVector v(n);
  v[k] = 1.0;
  return UnitVector(std::move(v));
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[j * n + i] = std::conj(m(i, j));
  return ComplexMatrix(n, std::move(e));
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_size(a, b, "matmul");
  const std::size_t n = a.size();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += a(i, k) * b(k, j);
      e[i * n + j] = acc;
    }
  }
  return ComplexMatrix(n, std::move(e));
}

ComplexMatrix real_part(const ComplexMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    e[i * n + i] = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      e[i * n + j] = v;
      e[j * n + i] = std::conj(v);
    }
  }
  return ComplexMatrix(n, std::move(e));
}

ComplexMatrix imag_part(const ComplexMatrix& m) {
  const std::size_t n = m.size();
  const Complex half_over_i(0.0, -0.5);
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    e[i * n + i] = m(i, i).imag();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = half_over_i * (m(i, j) - std::conj(m(j, i)));
      e[i * n + j] = v;
      e[j * n + i] = std::conj(v);
    }
  }
  return ComplexMatrix(n, std::move(e));
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_size(a, b, "operator+");
  std::vector<Complex> e(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries()[i];
  return ComplexMatrix(a.size(), std::move(e));
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_size(a, b, "operator-");
  std::vector<Complex> e(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.entries()[i];
  return ComplexMatrix(a.size(), std::move(e));
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix operator*(Complex s, const ComplexMatrix& m) {
  std::vector<Complex> e(m.entries().begin(), m.entries().end());
  for (Complex& z : e) z *= s;
  return ComplexMatrix(m.size(), std::move(e));
}

ComplexMatrix operator*(double s, const ComplexMatrix& m) { return Complex(s, 0.0) * m; }

double frobenius_norm(const ComplexMatrix& m) {
  double acc = 0.0;
  for (const Complex& z : m.entries()) acc += std::norm(z);
  return std::sqrt(acc);
}

double hermitian_defect(const ComplexMatrix& m) {
  const std::size_t n = m.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) acc += std::norm(m(i, j) - std::conj(m(j, i)));
  return std::sqrt(acc);
}

Complex inner(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw DimensionMismatch("inner: vector length mismatch");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * std::conj(y[i]);
  return acc;
}

double norm(std::span<const Complex> x) {
  double acc = 0.0;
  for (const Complex& z : x) acc += std::norm(z);
  return std::sqrt(acc);
}

ComplexVector matvec(const ComplexMatrix& m, std::span<const Complex> x) {
  const std::size_t n = m.size();
  if (x.size() != n) throw DimensionMismatch("matvec: vector length does not match matrix");
  ComplexVector y(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += m(i, k) * x[k];
    y[i] = acc;
  }
  return y;
}

Complex quadratic_form(const ComplexMatrix& m, std::span<const Complex> x) {
  const ComplexVector mx = matvec(m, x);
  return inner(mx, x);
}

}  // namespace numrad
