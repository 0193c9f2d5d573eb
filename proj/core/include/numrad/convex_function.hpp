#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "numrad/matrix.hpp"

namespace numrad {

/// Closed registry of increasing convex functions f on [0, inf) with
/// f(0) >= 0:
///
///   Power(r)      t^r,           r >= 1, defined on [0, inf)
///   ExpM1(s)      e^{s t} - 1,   s > 0,  convex on all of R
///   AffineQuad(c) t + c t^2,     c >= 0, convex on all of R
///
/// Adding a family means extending Kind, the factory set, evaluation and
/// parse/to_string; every family must stay increasing and convex.
class ConvexFunctionSpec {
 public:
  enum class Kind { Power, ExpM1, AffineQuad };

  static ConvexFunctionSpec power(double r);
  static ConvexFunctionSpec exp_m1(double scale);
  static ConvexFunctionSpec affine_quad(double c);

  /// "pow:r", "expm1:s" or "quad:c".
  static ConvexFunctionSpec parse(std::string_view text);
  std::string to_string() const;

  Kind kind() const noexcept { return kind_; }
  double parameter() const noexcept { return parameter_; }

  /// Left end of the interval on which f is defined and convex (0 or -inf).
  double domain_lower() const noexcept;

  /// Throws DomainError outside the domain or on overflow.
  double operator()(double t) const;
  std::vector<double> map(std::span<const double> values) const;

  /// f(H) for Hermitian H whose spectrum lies in the domain.
  ComplexMatrix apply(const ComplexMatrix& h) const;

  bool operator==(const ConvexFunctionSpec&) const = default;

 private:
  ConvexFunctionSpec(Kind kind, double parameter) : kind_(kind), parameter_(parameter) {}
  Kind kind_;
  double parameter_;
};

/// pow:1, pow:2, expm1:0.5, quad:1.
std::vector<ConvexFunctionSpec> default_function_registry();

}  // namespace numrad
