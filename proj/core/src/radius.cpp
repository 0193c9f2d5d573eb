#include "numrad/radius.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "numrad/errors.hpp"
#include "numrad/spectral.hpp"

namespace numrad {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kInitialGrid = 64;

// Re(e^{i theta} T) = cos(theta) X - sin(theta) Y with X = Re T, Y = Im T.
class RotatedRealPart {
 public:
  explicit RotatedRealPart(const ComplexMatrix& t) : x_(real_part(t)), y_(imag_part(t)) {}

  ComplexMatrix at(double theta) const {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const std::size_t n = x_.size();
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n * n; ++i) e[i] = c * x_.entries()[i] - s * y_.entries()[i];
    return ComplexMatrix(n, std::move(e));
  }

 private:
  ComplexMatrix x_;
  ComplexMatrix y_;
};

double evaluate_profile(const RotatedRealPart& rotated, double theta, const ProfileSpec& spec) {
  const ComplexMatrix h = rotated.at(theta);
  if (std::holds_alternative<MaxEig>(spec)) return hermitian_eigenvalues(h).back();
  return std::get<NormSpec>(spec).from_singular_values(hermitian_singular_values(h));
}

// Both profiles are support functions of a compact convex planar set S
// (the numerical range for MaxEig, the dual unit ball of the seminorm
// (a, b) -> N(a Re T - b Im T) otherwise), and the radius is max |s| over S.
// Support lines at two angles delta < pi apart meet at a vertex of a polygon
// containing S; the largest vertex modulus bounds the maximum from above.
double vertex_bound(double g1, double g2, double delta) {
  const double s = std::sin(delta);
  const double ch = std::cos(0.5 * delta);
  const double v2 = (g1 - g2) * (g1 - g2) / (s * s) + g1 * g2 / (ch * ch);
  return std::sqrt(std::max(v2, 0.0));
}

double interval_bound(double g1, double g2, double delta, double lipschitz) {
  const double piyavskii = 0.5 * (g1 + g2) + 0.5 * lipschitz * delta;
  return std::min(vertex_bound(g1, g2, delta), piyavskii);
}

struct Sample {
  double theta;
  double value;
};

RadiusResult maximize_profile(const std::function<double(double)>& profile, double period,
                              double lipschitz, double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw InvalidArgument("radius tolerance must be positive");

  std::size_t evaluations = 0;
  auto evaluate = [&](double theta) {
    if (++evaluations > kMaxProfileEvaluations) {
      throw NonConvergence("radius search exceeded " + std::to_string(kMaxProfileEvaluations) +
                           " profile evaluations");
    }
    return profile(theta);
  };

  std::vector<Sample> samples;
  samples.reserve(kInitialGrid);
  for (std::size_t k = 0; k < kInitialGrid; ++k) {
    const double theta = period * static_cast<double>(k) / static_cast<double>(kInitialGrid);
    samples.push_back({theta, evaluate(theta)});
  }

  std::vector<double> fresh;
  while (true) {
    const std::size_t m = samples.size();
    std::size_t best = 0;
    for (std::size_t i = 1; i < m; ++i)
      if (samples[i].value > samples[best].value) best = i;
    const double lower = samples[best].value;

    auto next_theta = [&](std::size_t i) {
      return i + 1 < m ? samples[i + 1].theta : samples[0].theta + period;
    };

    double upper = lower;
    fresh.clear();
    for (std::size_t i = 0; i < m; ++i) {
      const Sample& a = samples[i];
      const Sample& b = samples[(i + 1) % m];
      const double delta = next_theta(i) - a.theta;
      const double bound = interval_bound(a.value, b.value, delta, lipschitz);
      upper = std::max(upper, bound);
      if (bound > lower + tol) {
        double mid = a.theta + 0.5 * delta;
        if (mid >= period) mid -= period;
        fresh.push_back(mid);
      }
    }
    if (fresh.empty()) {
      return RadiusResult{lower, samples[best].theta, std::max(0.0, upper - lower), evaluations};
    }

    // Three-point parabolic step through the best sample and its neighbours.
    {
      const Sample& mid = samples[best];
      const Sample& left = samples[(best + m - 1) % m];
      const Sample& right = samples[(best + 1) % m];
      const double t0 = best == 0 ? left.theta - period : left.theta;
      const double t1 = mid.theta;
      const double t2 = best + 1 == m ? right.theta + period : right.theta;
      const double d0 = t1 - t0;
      const double d2 = t2 - t1;
      const double num = d0 * d0 * (mid.value - right.value) - d2 * d2 * (mid.value - left.value);
      const double den = d0 * (mid.value - right.value) + d2 * (mid.value - left.value);
      if (den != 0.0) {
        const double vertex = t1 - 0.5 * num / den;
        const double guard = 1e-3 * std::min(d0, d2);
        if (vertex > t0 + guard && vertex < t2 - guard && std::abs(vertex - t1) > guard) {
          double wrapped = std::fmod(vertex, period);
          if (wrapped < 0.0) wrapped += period;
          fresh.push_back(wrapped);
        }
      }
    }

    std::vector<Sample> added;
    added.reserve(fresh.size());
    for (double theta : fresh) added.push_back({theta, evaluate(theta)});
    std::sort(added.begin(), added.end(), [](const Sample& a, const Sample& b) { return a.theta < b.theta; });
    std::vector<Sample> merged;
    merged.reserve(samples.size() + added.size());
    std::merge(samples.begin(), samples.end(), added.begin(), added.end(), std::back_inserter(merged),
               [](const Sample& a, const Sample& b) { return a.theta < b.theta; });
    // Drop exact duplicates so that every interval has positive width.
    merged.erase(std::unique(merged.begin(), merged.end(),
                             [](const Sample& a, const Sample& b) { return a.theta == b.theta; }),
                 merged.end());
    if (merged.size() == samples.size()) {
      throw NonConvergence("radius search cannot resolve the profile at double precision");
    }
    samples = std::move(merged);
  }
}

}  // namespace

double rotation_profile(const ComplexMatrix& t, double theta, const ProfileSpec& spec) {
  return evaluate_profile(RotatedRealPart(t), theta, spec);
}

RadiusResult numerical_radius(const ComplexMatrix& t, double tol) {
  const RotatedRealPart rotated(t);
  const ProfileSpec spec = MaxEig{};
  return maximize_profile([&](double theta) { return evaluate_profile(rotated, theta, spec); }, kTwoPi,
                          frobenius_norm(t), tol);
}

RadiusResult generalized_numerical_radius(const ComplexMatrix& t, const NormSpec& spec, double tol) {
  const RotatedRealPart rotated(t);
  const ProfileSpec profile = spec;
  const double lipschitz = evaluate_norm(t, spec);
  return maximize_profile([&](double theta) { return evaluate_profile(rotated, theta, profile); },
                          std::numbers::pi, lipschitz, tol);
}

double numerical_radius_oracle(const ComplexMatrix& t, std::size_t samples, std::size_t iters,
                               std::uint64_t seed) {
  if (samples == 0) throw InvalidArgument("oracle needs at least one sample");
  const std::size_t n = t.size();
  const RotatedRealPart rotated(t);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  double best = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    ComplexVector x(n);
    for (Complex& z : x) {
      const double re = normal(rng);
      const double im = normal(rng);
      z = Complex(re, im);
    }
    const double len = norm(x);
    if (len == 0.0) continue;
    for (Complex& z : x) z /= len;

    Complex value = quadratic_form(t, x);
    for (std::size_t it = 0; it < iters; ++it) {
      const double phi = std::abs(value) > 0.0 ? -std::arg(value) : 0.0;
      const HermitianEigenDecomposition d = hermitian_eig(rotated.at(phi));
      for (std::size_t i = 0; i < n; ++i) x[i] = d.eigenvectors(i, n - 1);
      const Complex next = quadratic_form(t, x);
      const double gain = std::abs(next) - std::abs(value);
      value = next;
      if (gain <= 1e-15 * (1.0 + std::abs(value))) break;
    }
    best = std::max(best, std::abs(value));
  }
  return best;
}

}  // namespace numrad
