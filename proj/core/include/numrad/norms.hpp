#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "numrad/matrix.hpp"

namespace numrad {

enum class NormKind { Operator, SchattenP, KyFan, Trace, Frobenius };

/// Selector for a unitarily invariant norm. Every kind is a symmetric gauge
/// function of the singular values.
///
/// Canonical strings: "op", "schatten:p", "kyfan:k", "trace", "fro".
class NormSpec {
 public:
  static NormSpec operator_norm() { return NormSpec(NormKind::Operator, 0.0, 0); }
  /// Throws InvalidArgument unless p >= 1 and finite.
  static NormSpec schatten(double p);
  /// Throws InvalidArgument for k == 0; k <= n is checked at evaluation.
  static NormSpec ky_fan(std::size_t k);
  static NormSpec trace() { return NormSpec(NormKind::Trace, 0.0, 0); }
  static NormSpec frobenius() { return NormSpec(NormKind::Frobenius, 0.0, 0); }

  /// Parses the canonical string form. Throws InvalidArgument.
  static NormSpec parse(std::string_view text);
  std::string to_string() const;

  NormKind kind() const noexcept { return kind_; }
  double p() const noexcept { return p_; }
  std::size_t k() const noexcept { return k_; }

  /// Evaluates the norm from a descending singular-value vector.
  double from_singular_values(std::span<const double> descending) const;

  bool operator==(const NormSpec&) const = default;

 private:
  NormSpec(NormKind kind, double p, std::size_t k) : kind_(kind), p_(p), k_(k) {}
  NormKind kind_;
  double p_;
  std::size_t k_;
};

double evaluate_norm(const ComplexMatrix& a, const NormSpec& spec);
/// Largest singular value.
double operator_norm(const ComplexMatrix& a);

}  // namespace numrad
