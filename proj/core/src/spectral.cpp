#include "numrad/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "numrad/errors.hpp"

namespace numrad {
namespace {

struct JacobiOutput {
  std::vector<double> values;   // ascending
  std::vector<Complex> vectors; // row-major, columns are eigenvectors; empty if not requested
};

// Row-major work matrix accessor.
struct Work {
  std::size_t n;
  std::vector<Complex> a;
  Complex& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
};

ComplexMatrix symmetrized(const ComplexMatrix& h) {
  const double fro = frobenius_norm(h);
  const double defect = hermitian_defect(h);
  if (defect > 1e-10 * fro) {
    throw NotHermitian("matrix is not Hermitian (||H - H*||_F = " + std::to_string(defect) + ")");
  }
  return real_part(h);
}

JacobiOutput jacobi(const ComplexMatrix& h, double tol, bool want_vectors) {
  if (!(tol > 0.0)) throw InvalidArgument("eigensolver tolerance must be positive");
  const std::size_t n = h.size();
  Work a{n, std::vector<Complex>(h.entries().begin(), h.entries().end())};
  Work v{n, {}};
  if (want_vectors) {
    v.a.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;
  }
  const double threshold = tol * (1.0 + frobenius_norm(h));

  bool converged = false;
  for (int sweep = 0; sweep <= kMaxJacobiSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    off = std::sqrt(2.0 * off);
    if (off <= threshold) {
      converged = true;
      break;
    }
    if (sweep == kMaxJacobiSweeps) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        // Phase change on index q makes a(p, q) real and positive.
        const Complex phase = std::conj(a(p, q) / mag);
        for (std::size_t k = 0; k < n; ++k) a(k, q) *= phase;
        for (std::size_t k = 0; k < n; ++k) a(q, k) *= std::conj(phase);
        if (want_vectors)
          for (std::size_t k = 0; k < n; ++k) v(k, q) *= phase;

        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
          a(p, k) = std::conj(a(k, p));
          a(q, k) = std::conj(a(k, q));
        }
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = c * vkp - s * vkq;
            v(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
  }
  if (!converged) {
    throw NonConvergence("Jacobi eigensolver did not converge within " +
                         std::to_string(kMaxJacobiSweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  JacobiOutput out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a(order[i], order[i]).real();
  if (want_vectors) {
    out.vectors.resize(n * n);
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t row = 0; row < n; ++row) out.vectors[row * n + col] = v(row, order[col]);
  }
  return out;
}

double decomposition_residual(const ComplexMatrix& h, const HermitianEigenDecomposition& d) {
  const std::size_t n = h.size();
  const ComplexMatrix hv = matmul(h, d.eigenvectors);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      acc += std::norm(hv(i, j) - d.eigenvectors(i, j) * d.eigenvalues[j]);
  return std::sqrt(acc);
}

}  // namespace

HermitianEigenDecomposition hermitian_eig(const ComplexMatrix& h, double tol) {
  const ComplexMatrix sym = symmetrized(h);
  JacobiOutput out = jacobi(sym, tol, true);
  HermitianEigenDecomposition d{std::move(out.values), ComplexMatrix(sym.size(), std::move(out.vectors)), 0.0};
  d.residual = decomposition_residual(sym, d);
  return d;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, double tol) {
  return jacobi(symmetrized(h), tol, false).values;
}

std::vector<double> hermitian_singular_values(const ComplexMatrix& h) {
  std::vector<double> s = hermitian_eigenvalues(h);
  for (double& x : s) x = std::abs(x);
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

std::vector<double> clamp_psd(std::span<const double> eigenvalues) {
  std::vector<double> out(eigenvalues.begin(), eigenvalues.end());
  if (out.empty()) return out;
  const double top = *std::max_element(out.begin(), out.end());
  const double floor = -1e-10 * (1.0 + std::max(top, 0.0));
  for (double& x : out) {
    if (x < floor) {
      throw DomainError("eigenvalue " + std::to_string(x) + " is too negative for a PSD matrix");
    }
    if (x < 0.0) x = 0.0;
  }
  return out;
}

// Largest entry magnitude; dividing by it keeps A*A away from overflow/underflow.
static double entry_scale(const ComplexMatrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

std::vector<double> singular_values(const ComplexMatrix& a) {
  const double m = entry_scale(a);
  if (m == 0.0) return std::vector<double>(a.size(), 0.0);
  const ComplexMatrix u = (1.0 / m) * a;
  std::vector<double> s = clamp_psd(hermitian_eigenvalues(matmul(adjoint(u), u)));
  for (double& x : s) x = m * std::sqrt(x);
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

ComplexMatrix reconstruct(const HermitianEigenDecomposition& basis, std::span<const double> values) {
  const ComplexMatrix& v = basis.eigenvectors;
  const std::size_t n = v.size();
  if (values.size() != n) throw DimensionMismatch("reconstruct: value count does not match basis");
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += v(i, k) * values[k] * std::conj(v(j, k));
      e[i * n + j] = acc;
      e[j * n + i] = std::conj(acc);
    }
    e[i * n + i] = e[i * n + i].real();
  }
  return ComplexMatrix(n, std::move(e));
}

double spectral_quadratic_form(const HermitianEigenDecomposition& basis, std::span<const double> values,
                               std::span<const Complex> x) {
  const ComplexMatrix& v = basis.eigenvectors;
  const std::size_t n = v.size();
  if (values.size() != n || x.size() != n) {
    throw DimensionMismatch("spectral_quadratic_form: size mismatch");
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    Complex proj = 0.0;  // <x, v_k>
    for (std::size_t i = 0; i < n; ++i) proj += x[i] * std::conj(v(i, k));
    acc += values[k] * std::norm(proj);
  }
  return acc;
}

ComplexMatrix matrix_abs(const ComplexMatrix& a) {
  const double m = entry_scale(a);
  if (m == 0.0) return a;
  const ComplexMatrix u = (1.0 / m) * a;
  const HermitianEigenDecomposition d = hermitian_eig(matmul(adjoint(u), u));
  std::vector<double> root = clamp_psd(d.eigenvalues);
  for (double& x : root) x = m * std::sqrt(x);
  return reconstruct(d, root);
}

ComplexMatrix apply_spectral_function(const ComplexMatrix& h, const std::function<double(double)>& f,
                                      double domain_lower) {
  const HermitianEigenDecomposition d = hermitian_eig(h);
  std::vector<double> values = d.eigenvalues;
  if (domain_lower == 0.0) {
    values = clamp_psd(values);
  } else if (std::isfinite(domain_lower)) {
    for (double x : values) {
      if (x < domain_lower) throw DomainError("spectrum leaves the function's domain");
    }
  }
  for (double& x : values) {
    x = f(x);
    if (!std::isfinite(x)) throw DomainError("spectral function is not finite on the spectrum");
  }
  return reconstruct(d, values);
}

ComplexMatrix matrix_power(const ComplexMatrix& h, double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw InvalidArgument("matrix_power: exponent must be positive");
  return apply_spectral_function(h, [p](double x) { return std::pow(x, p); }, 0.0);
}

std::vector<double> psd_sum_eigenvalues(std::span<const PsdTerm> terms) {
  if (terms.empty()) throw InvalidArgument("psd_sum_eigenvalues: no terms");
  const std::size_t n = terms.front().basis->eigenvectors.size();

  // Rows sqrt(w d_j) conj(v_j)^T, so that G* G equals the sum.
  struct Row {
    double scale;
    std::vector<Complex> entries;
  };
  std::vector<Row> rows;
  for (const PsdTerm& term : terms) {
    if (term.basis == nullptr) throw InvalidArgument("psd_sum_eigenvalues: missing basis");
    const ComplexMatrix& v = term.basis->eigenvectors;
    if (v.size() != n || term.values.size() != n) {
      throw DimensionMismatch("psd_sum_eigenvalues: terms of different dimension");
    }
    if (!(term.weight >= 0.0)) throw DomainError("psd_sum_eigenvalues: negative weight");
    for (std::size_t j = 0; j < n; ++j) {
      const double d = term.values[j];
      if (!(d >= 0.0) || !std::isfinite(d)) throw DomainError("psd_sum_eigenvalues: invalid term value");
      const double scale = std::sqrt(term.weight * d);
      if (scale == 0.0) continue;
      Row r{scale, std::vector<Complex>(n)};
      for (std::size_t k = 0; k < n; ++k) r.entries[k] = scale * std::conj(v(k, j));
      rows.push_back(std::move(r));
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.scale > b.scale; });

  const std::size_t m = rows.size();
  if (m == 0) return std::vector<double>(n, 0.0);

  // Householder QR with column pivoting on the m x n matrix G.
  std::vector<Complex> g(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k) g[i * n + k] = rows[i].entries[k];
  auto at = [&](std::size_t i, std::size_t k) -> Complex& { return g[i * n + k]; };

  const std::size_t steps = std::min(m, n);
  for (std::size_t k = 0; k < steps; ++k) {
    std::size_t pivot = k;
    double best = -1.0;
    for (std::size_t c = k; c < n; ++c) {
      double s = 0.0;
      for (std::size_t i = k; i < m; ++i) s += std::norm(at(i, c));
      if (s > best) {
        best = s;
        pivot = c;
      }
    }
    if (pivot != k)
      for (std::size_t i = 0; i < m; ++i) std::swap(at(i, k), at(i, pivot));

    const double xnorm = std::sqrt(best);
    if (xnorm == 0.0) break;
    const Complex x0 = at(k, k);
    const Complex unit = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex(1.0, 0.0);
    const Complex alpha = -unit * xnorm;
    std::vector<Complex> w(m - k);
    for (std::size_t i = k; i < m; ++i) w[i - k] = at(i, k);
    w[0] -= alpha;
    double wnorm2 = 0.0;
    for (const Complex& z : w) wnorm2 += std::norm(z);
    if (wnorm2 == 0.0) continue;
    for (std::size_t c = k; c < n; ++c) {
      Complex dot = 0.0;
      for (std::size_t i = k; i < m; ++i) dot += std::conj(w[i - k]) * at(i, c);
      const Complex factor = 2.0 * dot / wnorm2;
      for (std::size_t i = k; i < m; ++i) at(i, c) -= factor * w[i - k];
    }
  }

  // One-sided Jacobi on Y = R*, whose columns are the conjugated rows of R.
  std::vector<Complex> y(n * n, 0.0);
  auto yat = [&](std::size_t i, std::size_t c) -> Complex& { return y[i * n + c]; };
  for (std::size_t r = 0; r < steps; ++r)
    for (std::size_t c = r; c < n; ++c) yat(c, r) = std::conj(at(r, c));

  constexpr double kOrthTol = 1e-15;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxJacobiSweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          alpha += std::norm(yat(k, i));
          beta += std::norm(yat(k, j));
          gamma += std::conj(yat(k, i)) * yat(k, j);
        }
        const double gmag = std::abs(gamma);
        if (gmag == 0.0 || gmag <= kOrthTol * std::sqrt(alpha * beta)) continue;
        converged = false;
        const Complex phase = std::conj(gamma) / gmag;
        for (std::size_t k = 0; k < n; ++k) yat(k, j) *= phase;
        const double zeta = (beta - alpha) / (2.0 * gmag);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t k = 0; k < n; ++k) {
          const Complex yi = yat(k, i);
          const Complex yj = yat(k, j);
          yat(k, i) = c * yi - s * yj;
          yat(k, j) = s * yi + c * yj;
        }
      }
    }
  }
  if (!converged) throw NonConvergence("one-sided Jacobi did not converge");

  std::vector<double> eig(n);
  for (std::size_t c = 0; c < n; ++c) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += std::norm(yat(k, c));
    eig[c] = s;
  }
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace numrad
