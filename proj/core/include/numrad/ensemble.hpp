#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "numrad/matrix.hpp"

namespace numrad {

enum class EnsembleKind { Ginibre, Normal, Nilpotent, HaarUnitary, HermitianPSD };

std::string_view to_string(EnsembleKind kind);
/// Accepts the names printed by to_string (case-sensitive). Throws InvalidArgument.
EnsembleKind parse_ensemble_kind(std::string_view text);

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::Ginibre;
  std::size_t n = 2;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
};

using Rng = std::mt19937_64;

/// Mixes a master seed with a stream index (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
Complex complex_gaussian(Rng& rng);

ComplexMatrix sample_ginibre(std::size_t n, Rng& rng);
/// Haar unitary: Gram-Schmidt on a Ginibre sample, R diagonal made positive.
ComplexMatrix sample_haar_unitary(std::size_t n, Rng& rng);
/// U diag(z) U* with Haar U and standard complex Gaussian z.
ComplexMatrix sample_normal(std::size_t n, Rng& rng);
/// Strictly upper-triangular Ginibre entries; T^n = 0.
ComplexMatrix sample_nilpotent(std::size_t n, Rng& rng);
/// G* G for Ginibre G.
ComplexMatrix sample_hermitian_psd(std::size_t n, Rng& rng);
ComplexMatrix sample(EnsembleKind kind, std::size_t n, Rng& rng);

ComplexVector random_complex_vector(std::size_t n, Rng& rng);
UnitVector random_unit_vector(std::size_t n, Rng& rng);

/// `trials` independent samples; sample i uses derive_seed(seed, i).
std::vector<ComplexMatrix> generate(const EnsembleSpec& spec);

}  // namespace numrad
