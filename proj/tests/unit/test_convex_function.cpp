#include <gtest/gtest.h>

#include <cmath>

#include "../oracles.hpp"
#include "numrad/convex_function.hpp"
#include "numrad/ensemble.hpp"
#include "numrad/errors.hpp"

using namespace numrad;

TEST(ConvexFunction, RegistryIsIncreasingAndConvexOnGrid) {
  auto specs = default_function_registry();
  specs.push_back(ConvexFunctionSpec::power(1.5));
  specs.push_back(ConvexFunctionSpec::power(3));
  specs.push_back(ConvexFunctionSpec::exp_m1(0.3));
  specs.push_back(ConvexFunctionSpec::affine_quad(0));
  for (const auto& f : specs) {
    EXPECT_GE(f(0.0), 0.0) << f.to_string();
    EXPECT_TRUE(oracle::convex_increasing_on_grid([&](double t) { return f(t); }, 100.0)) << f.to_string();
  }
}

TEST(ConvexFunction, Values) {
  EXPECT_DOUBLE_EQ(ConvexFunctionSpec::power(2)(3.0), 9.0);
  EXPECT_DOUBLE_EQ(ConvexFunctionSpec::exp_m1(0.5)(2.0), std::expm1(1.0));
  EXPECT_DOUBLE_EQ(ConvexFunctionSpec::affine_quad(1)(2.0), 6.0);
  EXPECT_DOUBLE_EQ(ConvexFunctionSpec::affine_quad(1)(-0.5), -0.25);
}

TEST(ConvexFunction, DomainsAndErrors) {
  EXPECT_THROW(ConvexFunctionSpec::power(0.5), InvalidArgument);
  EXPECT_THROW(ConvexFunctionSpec::exp_m1(0), InvalidArgument);
  EXPECT_THROW(ConvexFunctionSpec::affine_quad(-1), InvalidArgument);
  EXPECT_EQ(ConvexFunctionSpec::power(2).domain_lower(), 0.0);
  EXPECT_EQ(ConvexFunctionSpec::exp_m1(1).domain_lower(), -std::numeric_limits<double>::infinity());
  EXPECT_THROW(ConvexFunctionSpec::power(2)(-1.0), DomainError);
  EXPECT_THROW(ConvexFunctionSpec::exp_m1(1)(1000.0), DomainError);
}

TEST(ConvexFunction, StringsRoundTrip) {
  for (const char* s : {"pow:1", "pow:2.5", "expm1:0.5", "quad:1"})
    EXPECT_EQ(ConvexFunctionSpec::parse(s).to_string(), s);
  for (const char* s : {"pow", "pow:0.5", "exp:1", "quad:-2", "expm1:abc"})
    EXPECT_THROW(ConvexFunctionSpec::parse(s), InvalidArgument) << s;
}

TEST(ConvexFunction, MatrixApplicationMatchesReference) {
  Rng rng(2);
  const auto h = sample_hermitian_psd(4, rng);
  const auto f = ConvexFunctionSpec::exp_m1(0.5);
  const auto ref = oracle::spectral(oracle::to_eigen(h), [](double t) { return std::expm1(0.5 * t); });
  EXPECT_LT((oracle::to_eigen(f.apply(h)) - ref).norm(), 1e-11 * ref.norm());
  EXPECT_THROW(ConvexFunctionSpec::power(2).apply(ComplexMatrix{{-1, 0}, {0, 1}}), DomainError);
  EXPECT_NO_THROW(ConvexFunctionSpec::affine_quad(1).apply(ComplexMatrix{{-1, 0}, {0, 1}}));
}
