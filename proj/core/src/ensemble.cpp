#include "numrad/ensemble.hpp"

#include <cmath>

#include "numrad/errors.hpp"

namespace numrad {

std::string_view to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::Ginibre:
      return "Ginibre";
    case EnsembleKind::Normal:
      return "Normal";
    case EnsembleKind::Nilpotent:
      return "Nilpotent";
    case EnsembleKind::HaarUnitary:
      return "HaarUnitary";
    case EnsembleKind::HermitianPSD:
      return "HermitianPSD";
  }
  return "?";
}

EnsembleKind parse_ensemble_kind(std::string_view text) {
  for (EnsembleKind kind : {EnsembleKind::Ginibre, EnsembleKind::Normal, EnsembleKind::Nilpotent,
                            EnsembleKind::HaarUnitary, EnsembleKind::HermitianPSD}) {
    if (text == to_string(kind)) return kind;
  }
  throw InvalidArgument("unknown ensemble '" + std::string(text) + "'");
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Complex complex_gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

ComplexVector random_complex_vector(std::size_t n, Rng& rng) {
  ComplexVector v(n);
  for (Complex& z : v) z = complex_gaussian(rng);
  return v;
}

UnitVector random_unit_vector(std::size_t n, Rng& rng) {
  while (true) {
    ComplexVector v = random_complex_vector(n, rng);
    if (norm(v) > 1e-12) return UnitVector::normalized(std::move(v));
  }
}

ComplexMatrix sample_ginibre(std::size_t n, Rng& rng) {
  std::vector<Complex> e(n * n);
  for (Complex& z : e) z = complex_gaussian(rng);
  return ComplexMatrix(n, std::move(e));
}

ComplexMatrix sample_haar_unitary(std::size_t n, Rng& rng) {
  const ComplexMatrix g = sample_ginibre(n, rng);
  // Column-wise modified Gram-Schmidt with one re-orthogonalization pass. The
  // R diagonal is the positive column norm, which is the phase fixing that
  // makes the distribution Haar.
  std::vector<ComplexVector> cols(n, ComplexVector(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) cols[j][i] = g(i, j);
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        const Complex proj = inner(cols[j], cols[k]);
        for (std::size_t i = 0; i < n; ++i) cols[j][i] -= proj * cols[k][i];
      }
    }
    const double len = norm(cols[j]);
    if (!(len > 0.0)) throw NonConvergence("degenerate Ginibre sample in Haar construction");
    for (Complex& z : cols[j]) z /= len;
  }
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i * n + j] = cols[j][i];
  return ComplexMatrix(n, std::move(e));
}

ComplexMatrix sample_normal(std::size_t n, Rng& rng) {
  const ComplexMatrix u = sample_haar_unitary(n, rng);
  std::vector<Complex> diag(n);
  for (Complex& z : diag) z = complex_gaussian(rng);
  return matmul(matmul(u, ComplexMatrix::diagonal(std::span<const Complex>(diag))), adjoint(u));
}

ComplexMatrix sample_nilpotent(std::size_t n, Rng& rng) {
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e[i * n + j] = complex_gaussian(rng);
  return ComplexMatrix(n, std::move(e));
}

ComplexMatrix sample_hermitian_psd(std::size_t n, Rng& rng) {
  const ComplexMatrix g = sample_ginibre(n, rng);
  return real_part(matmul(adjoint(g), g));
}

ComplexMatrix sample(EnsembleKind kind, std::size_t n, Rng& rng) {
  if (n == 0) throw InvalidArgument("ensemble dimension must be positive");
  switch (kind) {
    case EnsembleKind::Ginibre:
      return sample_ginibre(n, rng);
    case EnsembleKind::Normal:
      return sample_normal(n, rng);
    case EnsembleKind::Nilpotent:
      return sample_nilpotent(n, rng);
    case EnsembleKind::HaarUnitary:
      return sample_haar_unitary(n, rng);
    case EnsembleKind::HermitianPSD:
      return sample_hermitian_psd(n, rng);
  }
  throw InvalidArgument("unknown ensemble kind");
}

std::vector<ComplexMatrix> generate(const EnsembleSpec& spec) {
  if (spec.n == 0) throw InvalidArgument("ensemble dimension must be positive");
  if (spec.trials == 0) throw InvalidArgument("ensemble needs at least one trial");
  std::vector<ComplexMatrix> out;
  out.reserve(spec.trials);
  for (std::size_t i = 0; i < spec.trials; ++i) {
    Rng rng(derive_seed(spec.seed, i));
    out.push_back(sample(spec.kind, spec.n, rng));
  }
  return out;
}

}  // namespace numrad
