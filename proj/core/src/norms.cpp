#include "numrad/norms.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "numrad/errors.hpp"
#include "numrad/spectral.hpp"

namespace numrad {
namespace {

double parse_number(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw InvalidArgument("invalid " + std::string(what) + " in norm spec: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

NormSpec NormSpec::schatten(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw InvalidArgument("Schatten norm requires finite p >= 1");
  }
  return NormSpec(NormKind::SchattenP, p, 0);
}

NormSpec NormSpec::ky_fan(std::size_t k) {
  if (k == 0) throw InvalidArgument("Ky Fan norm requires k >= 1");
  return NormSpec(NormKind::KyFan, 0.0, k);
}

NormSpec NormSpec::parse(std::string_view text) {
  if (text == "op") return operator_norm();
  if (text == "trace") return trace();
  if (text == "fro") return frobenius();
  if (text.starts_with("schatten:")) return schatten(parse_number(text.substr(9), "Schatten exponent"));
  if (text.starts_with("kyfan:")) {
    const double k = parse_number(text.substr(6), "Ky Fan order");
    if (!(k >= 1.0) || k != std::floor(k) || k > 1e9) {
      throw InvalidArgument("Ky Fan order must be a positive integer");
    }
    return ky_fan(static_cast<std::size_t>(k));
  }
  throw InvalidArgument("unknown norm spec '" + std::string(text) +
                        "' (expected op, trace, fro, schatten:p or kyfan:k)");
}

std::string NormSpec::to_string() const {
  switch (kind_) {
    case NormKind::Operator:
      return "op";
    case NormKind::Trace:
      return "trace";
    case NormKind::Frobenius:
      return "fro";
    case NormKind::KyFan:
      return "kyfan:" + std::to_string(k_);
    case NormKind::SchattenP: {
      char buf[32];
      const auto res = std::to_chars(buf, buf + sizeof buf, p_);
      return "schatten:" + std::string(buf, res.ptr);
    }
  }
  return {};
}

double NormSpec::from_singular_values(std::span<const double> s) const {
  switch (kind_) {
    case NormKind::Operator:
      return s.empty() ? 0.0 : s.front();
    case NormKind::Trace: {
      double acc = 0.0;
      for (double x : s) acc += x;
      return acc;
    }
    case NormKind::Frobenius: {
      double acc = 0.0;
      for (double x : s) acc += x * x;
      return std::sqrt(acc);
    }
    case NormKind::KyFan: {
      if (k_ > s.size()) {
        throw InvalidArgument("Ky Fan order " + std::to_string(k_) + " exceeds dimension " +
                              std::to_string(s.size()));
      }
      double acc = 0.0;
      for (std::size_t i = 0; i < k_; ++i) acc += s[i];
      return acc;
    }
    case NormKind::SchattenP: {
      // Scale by the largest value so that large p does not overflow.
      const double top = s.empty() ? 0.0 : s.front();
      if (top == 0.0) return 0.0;
      double acc = 0.0;
      for (double x : s) acc += std::pow(x / top, p_);
      return top * std::pow(acc, 1.0 / p_);
    }
  }
  return 0.0;
}

double evaluate_norm(const ComplexMatrix& a, const NormSpec& spec) {
  return spec.from_singular_values(singular_values(a));
}

double operator_norm(const ComplexMatrix& a) { return evaluate_norm(a, NormSpec::operator_norm()); }

}  // namespace numrad
