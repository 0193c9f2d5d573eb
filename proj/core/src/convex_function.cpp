#include "numrad/convex_function.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "numrad/errors.hpp"
#include "numrad/spectral.hpp"

namespace numrad {
namespace {

double parse_parameter(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw InvalidArgument("invalid function parameter '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

ConvexFunctionSpec ConvexFunctionSpec::power(double r) {
  if (!(r >= 1.0) || !std::isfinite(r)) throw InvalidArgument("Power(r) requires finite r >= 1");
  return ConvexFunctionSpec(Kind::Power, r);
}

ConvexFunctionSpec ConvexFunctionSpec::exp_m1(double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw InvalidArgument("ExpM1(s) requires finite s > 0");
  return ConvexFunctionSpec(Kind::ExpM1, scale);
}

ConvexFunctionSpec ConvexFunctionSpec::affine_quad(double c) {
  if (!(c >= 0.0) || !std::isfinite(c)) throw InvalidArgument("AffineQuad(c) requires finite c >= 0");
  return ConvexFunctionSpec(Kind::AffineQuad, c);
}

ConvexFunctionSpec ConvexFunctionSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidArgument("function spec must look like pow:r, expm1:s or quad:c");
  }
  const std::string_view name = text.substr(0, colon);
  const double value = parse_parameter(text.substr(colon + 1));
  if (name == "pow") return power(value);
  if (name == "expm1") return exp_m1(value);
  if (name == "quad") return affine_quad(value);
  throw InvalidArgument("unknown function family '" + std::string(name) + "'");
}

std::string ConvexFunctionSpec::to_string() const {
  std::string out;
  switch (kind_) {
    case Kind::Power:
      out = "pow:";
      break;
    case Kind::ExpM1:
      out = "expm1:";
      break;
    case Kind::AffineQuad:
      out = "quad:";
      break;
  }
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, parameter_);
  return out + std::string(buf, res.ptr);
}

double ConvexFunctionSpec::domain_lower() const noexcept {
  return kind_ == Kind::Power ? 0.0 : -std::numeric_limits<double>::infinity();
}

double ConvexFunctionSpec::operator()(double t) const {
  double value = 0.0;
  switch (kind_) {
    case Kind::Power:
      if (t < 0.0) throw DomainError("Power function evaluated at a negative argument");
      value = std::pow(t, parameter_);
      break;
    case Kind::ExpM1:
      value = std::expm1(parameter_ * t);
      break;
    case Kind::AffineQuad:
      value = t + parameter_ * t * t;
      break;
  }
  if (!std::isfinite(value)) throw DomainError("convex function " + to_string() + " overflowed");
  return value;
}

std::vector<double> ConvexFunctionSpec::map(std::span<const double> values) const {
  std::vector<double> out;
  out.reserve(values.size());
  for (double t : values) out.push_back((*this)(t));
  return out;
}

ComplexMatrix ConvexFunctionSpec::apply(const ComplexMatrix& h) const {
  return apply_spectral_function(h, [this](double t) { return (*this)(t); }, domain_lower());
}

std::vector<ConvexFunctionSpec> default_function_registry() {
  return {ConvexFunctionSpec::power(1.0), ConvexFunctionSpec::power(2.0), ConvexFunctionSpec::exp_m1(0.5),
          ConvexFunctionSpec::affine_quad(1.0)};
}

}  // namespace numrad
