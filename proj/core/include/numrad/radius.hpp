#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>

#include "numrad/matrix.hpp"
#include "numrad/norms.hpp"

namespace numrad {

inline constexpr double kDefaultRadiusTolerance = 1e-10;
inline constexpr std::size_t kMaxProfileEvaluations = std::size_t{1} << 20;

struct RadiusResult {
  double value = 0.0;
  double theta_star = 0.0;       // maximizing angle in [0, 2 pi)
  double certified_error = 0.0;  // true maximum lies in [value, value + certified_error]
  std::size_t evaluations = 0;
};

/// Profile theta -> lambda_max(Re(e^{i theta} T)).
struct MaxEig {};
using ProfileSpec = std::variant<MaxEig, NormSpec>;

/// N(Re(e^{i theta} T)) for a norm, or lambda_max(Re(e^{i theta} T)) for MaxEig.
double rotation_profile(const ComplexMatrix& t, double theta, const ProfileSpec& spec);

/// w(T) = max over theta of lambda_max(Re(e^{i theta} T)), certified to `tol`.
///
/// Throws InvalidArgument for tol <= 0 and NonConvergence when certification
/// needs more than kMaxProfileEvaluations profile evaluations.
RadiusResult numerical_radius(const ComplexMatrix& t, double tol = kDefaultRadiusTolerance);

/// w_N(T) = sup over theta of N(Re(e^{i theta} T)). Same error contract.
RadiusResult generalized_numerical_radius(const ComplexMatrix& t, const NormSpec& spec,
                                          double tol = kDefaultRadiusTolerance);

/// Lower bound on w(T) from random unit vectors, each improved by `iters`
/// ascent steps x <- top eigenvector of Re(e^{i phi} T), phi = -arg <Tx, x>.
/// Deterministic for a given seed.
double numerical_radius_oracle(const ComplexMatrix& t, std::size_t samples, std::size_t iters,
                               std::uint64_t seed);

}  // namespace numrad
