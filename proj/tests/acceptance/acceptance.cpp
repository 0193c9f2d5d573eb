// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "numrad/ensemble.hpp"
#include "numrad/inequality.hpp"
#include "numrad/radius.hpp"
#include "numrad/report_io.hpp"
#include "numrad/suite.hpp"
#include "numrad_cli/commands.hpp"

using namespace numrad;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

int failures = 0;

void criterion(int index, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("AC%d %s  %s (%.2fs)%s%s\n", index, o.pass ? "PASS" : "FAIL", title, secs,
              o.detail.empty() ? "" : "  -- ", o.detail.c_str());
  std::fflush(stdout);
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  criterion(1, "worked example 1: w^2(B*A)=4, refined bound 6.25, classical bound 12.5", [] {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    Operands ops;
    ops.a = ComplexMatrix{{0, 1}, {0, 2}};
    ops.b = ComplexMatrix{{2, 0}, {1, 0}};
    const auto c = evaluate_check(InequalityId::Chain44, ops, CheckParams{});
    const double secs = elapsed(t0);
    o.require(std::abs(c.chain[0] - 4.0) <= 1e-8, "w^2(B*A) = " + num(c.chain[0]));
    o.require(std::abs(c.chain[1] - 6.25) <= 1e-8, "refined = " + num(c.chain[1]));
    o.require(std::abs(c.chain[2] - 12.5) <= 1e-8, "classical = " + num(c.chain[2]));
    o.require(c.pass, "chain not ordered");
    o.require(secs < 1.0, "took " + num(secs) + " s");
    if (o.pass) o.detail = num(c.chain[0]) + " <= " + num(c.chain[1]) + " <= " + num(c.chain[2]);
    return o;
  });

  criterion(2, "worked example 2: w^2(T)=4.87132 < 5.0712 < 5.12132", [] {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    Operands ops;
    ops.t = ComplexMatrix{{2, 1}, {0, 1}};
    const auto c = evaluate_check(InequalityId::Chain35, ops, CheckParams{});
    const double secs = elapsed(t0);
    o.require(std::abs(c.chain[0] - 4.87132) <= 1e-4, "w^2(T) = " + num(c.chain[0]));
    o.require(std::abs(c.chain[0] - (11 + 6 * std::sqrt(2.0)) / 4) <= 1e-9, "w^2(T) off the exact value");
    o.require(std::abs(c.chain[1] - 5.0712) <= 1e-3, "refined = " + num(c.chain[1]));
    o.require(std::abs(c.chain[2] - 5.12132) <= 1e-4, "classical = " + num(c.chain[2]));
    o.require(c.chain[0] < c.chain[1] && c.chain[1] < c.chain[2], "ordering not strict");
    o.require(secs < 1.0, "took " + num(secs) + " s");
    if (o.pass) o.detail = num(c.chain[0]) + " < " + num(c.chain[1]) + " < " + num(c.chain[2]);
    return o;
  });

  // The 1000-trial default run feeds criteria 3, 6 and 7.
  SuiteConfig config;
  const auto t0 = std::chrono::steady_clock::now();
  const RunReport report = run_suite(config);
  const double suite_secs = elapsed(t0);

  auto row = [&](InequalityId id) -> const IdSummary& {
    for (const auto& r : report.rows)
      if (r.id == id) return r;
    throw std::runtime_error("missing row");
  };

  criterion(3, "property suite: 1000 trials, Ginibre/Normal/Nilpotent, n=2..8, all ids, zero violations", [&] {
    Outcome o;
    std::size_t evaluations = 0;
    for (const auto& r : report.rows) {
      evaluations += r.evaluations;
      o.require(r.trials == 1000 && r.evaluations > 0, std::string(to_string(r.id)) + " not evaluated");
      o.require(r.failures == 0, std::string(to_string(r.id)) + " has " + std::to_string(r.failures) + " violations");
      o.require(r.errors == 0, std::string(to_string(r.id)) + " has " + std::to_string(r.errors) + " errors");
    }
    o.require(report.rows.size() == all_inequality_ids().size(), "catalog incomplete");
    o.require(report.min_slack >= -1e-8, "min slack " + num(report.min_slack));
    o.require(suite_secs < 300.0, "took " + num(suite_secs) + " s");
    if (o.pass)
      o.detail = std::to_string(evaluations) + " evaluations, min slack " + num(report.min_slack) + ", " +
                 num(suite_secs) + " s";
    return o;
  });

  criterion(4, "equality witnesses: nilpotent, normal, EQ21/EQ31 on normal T, COR12_POW with A=B", [] {
    Outcome o;
    Rng rng(2024);
    double worst = 0;
    for (int rep = 0; rep < 20; ++rep) {
      Operands nil;
      nil.t = sample_nilpotent(2, rng);
      const auto lower = evaluate_check(InequalityId::Eq38Lower, nil, {});
      o.require(std::abs(lower.lhs - lower.rhs) <= 1e-8, "nilpotent w - |T|/2 = " + num(lower.rhs - lower.lhs));

      Operands normal;
      normal.t = sample_normal(2 + rep % 7, rng);
      CheckContext ctx(normal);
      const auto upper = ctx.evaluate(InequalityId::Eq38Upper, {});
      o.require(std::abs(upper.lhs - upper.rhs) <= 1e-8, "normal |T| - w = " + num(upper.rhs - upper.lhs));
      for (auto id : {InequalityId::Eq21, InequalityId::Eq31}) {
        const auto r = ctx.evaluate(id, CheckParams{1.0, 0.5, {}, {}});
        worst = std::max(worst, std::abs(r.rhs - r.lhs));
        o.require(std::abs(r.rhs - r.lhs) <= 1e-7, std::string(to_string(id)) + " gap " + num(r.rhs - r.lhs));
      }

      Operands same;
      const auto a = sample_ginibre(2 + rep % 7, rng);
      same.a = a;
      same.b = a;
      const auto cor = evaluate_check(InequalityId::Cor12Pow, same, CheckParams{});
      worst = std::max(worst, std::abs(cor.rhs - cor.lhs) / std::max(1.0, cor.rhs));
      o.require(std::abs(cor.rhs - cor.lhs) <= 1e-7 * std::max(1.0, cor.rhs), "A=B gap " + num(cor.rhs - cor.lhs));
    }
    if (o.pass) o.detail = "largest equality gap " + num(worst);
    return o;
  });

  criterion(5, "radius oracle agreement on 100 random T (n<=6), certified error <= 1e-10", [] {
    Outcome o;
    Rng rng(5);
    double worst = 0, worst_err = 0;
    for (int i = 0; i < 100; ++i) {
      const auto t = sample_ginibre(1 + i % 6, rng);
      const auto r = numerical_radius(t);
      const double lower = numerical_radius_oracle(t, 24, 80, derive_seed(55, i));
      worst = std::max(worst, std::abs(r.value - lower));
      worst_err = std::max(worst_err, r.certified_error);
    }
    o.require(worst <= 1e-5, "max |certified - oracle| = " + num(worst));
    o.require(worst_err <= 1e-10, "max certified error = " + num(worst_err));
    if (o.pass) o.detail = "max |certified - oracle| " + num(worst) + ", max certified error " + num(worst_err);
    return o;
  });

  criterion(6, "generalized radius: operator norm recovers w within 2e-10; WN bounds hold for 5 norms", [&] {
    Outcome o;
    Rng rng(6);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
      const auto t = sample_ginibre(2 + i % 7, rng);
      worst = std::max(worst, std::abs(generalized_numerical_radius(t, NormSpec::operator_norm()).value -
                                       numerical_radius(t).value));
    }
    o.require(worst <= 2e-10, "max |w_op - w| = " + num(worst));
    o.require(config.norms.size() == 5, "norm list changed");
    for (auto id : {InequalityId::WnPropAlpha, InequalityId::WnPropMean}) {
      const auto& r = row(id);
      o.require(r.failures == 0 && r.errors == 0, std::string(to_string(id)) + " failed");
      o.require(r.min_slack >= -1e-8, std::string(to_string(id)) + " slack " + num(r.min_slack));
    }
    if (o.pass)
      o.detail = "max |w_op - w| " + num(worst) + "; WN cells " +
                 std::to_string(row(InequalityId::WnPropAlpha).evaluations + row(InequalityId::WnPropMean).evaluations);
    return o;
  });

  criterion(7, "refinement chains CHAIN44, CHAIN35, KITTANEH_CHAIN monotone in every trial", [&] {
    Outcome o;
    std::string summary;
    for (auto id : {InequalityId::Chain44, InequalityId::Chain35, InequalityId::KittanehChain}) {
      const auto& r = row(id);
      o.require(r.trials == 1000 && r.failures == 0 && r.errors == 0, std::string(to_string(id)) + " failed");
      o.require(r.min_slack >= -1e-8, std::string(to_string(id)) + " adjacent slack " + num(r.min_slack));
      summary += std::string(summary.empty() ? "" : ", ") + std::string(to_string(id)) + " " + num(r.min_slack);
    }
    if (o.pass) o.detail = "min adjacent slack: " + summary;
    return o;
  });

  criterion(8, "harness self-test: reversed inequality gives exit 1 and names the id", [] {
    Outcome o;
    for (const char* id : {"EQ31", "WN_PROP_MEAN", "KITTANEH_CHAIN"}) {
      numrad::cli::CheckOptions opts;
      opts.trials = 12;
      opts.inject_bug = id;
      std::ostringstream out, err;
      const int status = numrad::cli::cmd_check(opts, out, err);
      o.require(status == 1, std::string(id) + ": exit " + std::to_string(status));
      o.require(err.str().find(std::string("VIOLATION ") + id + ":") != std::string::npos,
                std::string(id) + " not named");
      o.require(out.str().find(std::string("\"violated_ids\": [\n      \"") + id + "\"\n    ]") != std::string::npos,
                std::string(id) + " not the only violated id in the report");
    }
    return o;
  });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
