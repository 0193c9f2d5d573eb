#include "numrad/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "numrad/errors.hpp"
#include "numrad/spectral.hpp"

namespace numrad {
namespace {

constexpr double kAlphaMin = 0.05;
constexpr double kAlphaMax = 0.95;

ComplexMatrix unit_scaled(const ComplexMatrix& m) {
  const double s = operator_norm(m);
  return s > 0.0 ? (1.0 / s) * m : m;
}

std::pair<ComplexMatrix, ComplexMatrix> jointly_scaled(const ComplexMatrix& a, const ComplexMatrix& b) {
  const double s = std::max(operator_norm(a), operator_norm(b));
  if (s == 0.0) return {a, b};
  return {(1.0 / s) * a, (1.0 / s) * b};
}

struct TrialResult {
  std::vector<TrialRecord> records;
  std::vector<FailureRecord> failures;
};

bool uses_psd_operands(InequalityId id, const CheckParams& p) {
  if (id == InequalityId::LemAujla) return true;
  // t^r is only defined on [0, inf): Jensen's inequality then needs a PSD H.
  return id == InequalityId::Lem23 && p.f && p.f->domain_lower() == 0.0;
}

void reverse_report(InequalityReport& rep) {
  std::reverse(rep.chain.begin(), rep.chain.end());
  std::reverse(rep.secondary_chain.begin(), rep.secondary_chain.end());
  finalize_report(rep);
}

TrialResult run_trial(const SuiteConfig& config, const std::vector<std::vector<CheckParams>>& cells,
                      std::size_t trial) {
  TrialResult out;
  const TrialOperands ops = draw_trial(config, trial);
  CheckContext general(ops.general, config.tolerances);
  CheckContext psd(ops.psd, config.tolerances);

  for (std::size_t k = 0; k < config.ids.size(); ++k) {
    const InequalityId id = config.ids[k];
    TrialRecord rec;
    rec.id = id;
    rec.trial = trial;
    rec.seed = ops.seed;
    rec.ensemble = ops.ensemble;
    rec.n = ops.n;
    for (const auto& p : cells[k]) {
      ++rec.cells;
      auto& ctx = uses_psd_operands(id, p) ? psd : general;
      FailureRecord failure;
      try {
        auto rep = ctx.evaluate(id, p);
        rep.seed = ops.seed;
        if (config.inject_reversed == id) reverse_report(rep);
        if (!rec.worst || rep.slack < rec.worst->slack) rec.worst = rep;
        if (rep.pass) continue;
        ++rec.failures;
        failure.params = rep.params;
        failure.operand_digest = rep.operand_digest;
        failure.chain = rep.chain;
        failure.slack = rep.slack;
      } catch (const Error& e) {
        ++rec.errors;
        if (rec.error.empty()) rec.error = e.what();
        failure.params = p;
        failure.operand_digest = ctx.digest();
        failure.error = e.what();
        failure.slack = std::numeric_limits<double>::quiet_NaN();
      }
      failure.id = id;
      failure.trial = trial;
      failure.seed = ops.seed;
      failure.ensemble = ops.ensemble;
      failure.n = ops.n;
      out.failures.push_back(std::move(failure));
    }
    out.records.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

std::vector<InequalityId> RunReport::violated_ids() const {
  std::vector<InequalityId> ids;
  for (const auto& row : rows)
    if (row.failures > 0) ids.push_back(row.id);
  return ids;
}

void validate(const SuiteConfig& c) {
  if (c.trials == 0) throw InvalidArgument("suite needs at least one trial");
  if (c.ensembles.empty()) throw InvalidArgument("suite needs at least one ensemble");
  if (c.dims.empty()) throw InvalidArgument("suite needs at least one dimension");
  if (c.ids.empty()) throw InvalidArgument("suite needs at least one inequality id");
  if (c.r_grid.empty() || c.alpha_grid.empty()) throw InvalidArgument("parameter grids must be non-empty");
  if (c.functions.empty()) throw InvalidArgument("suite needs at least one convex function");
  if (c.norms.empty()) throw InvalidArgument("suite needs at least one norm");
  const std::size_t min_dim = *std::min_element(c.dims.begin(), c.dims.end());
  if (min_dim < 2) throw InvalidArgument("suite dimensions must be >= 2");
  double max_r = 0.0;
  for (double r : c.r_grid) {
    if (!(std::isfinite(r) && r >= 1.0)) throw InvalidArgument("r grid values must be >= 1");
    max_r = std::max(max_r, r);
  }
  for (double a : c.alpha_grid)
    if (!(a >= kAlphaMin && a <= kAlphaMax)) throw InvalidArgument("alpha grid values must lie in [0.05, 0.95]");
  const double a_min = *std::min_element(c.alpha_grid.begin(), c.alpha_grid.end());
  const double a_max = *std::max_element(c.alpha_grid.begin(), c.alpha_grid.end());
  const double worst = 2.0 * max_r / std::min(a_min, 1.0 - a_max);
  if (worst > kMaxMatrixExponent || 4.0 * max_r > kMaxMatrixExponent)
    throw InvalidArgument("r and alpha grids produce matrix exponents above the cap");
  for (const auto& nspec : c.norms)
    if (nspec.kind() == NormKind::KyFan && nspec.k() > min_dim)
      throw InvalidArgument("Ky Fan order exceeds the smallest suite dimension");
  if (!(c.tolerances.radius > 0.0 && c.tolerances.abs >= 0.0 && c.tolerances.rel >= 0.0))
    throw InvalidArgument("invalid tolerances");
}

std::vector<CheckParams> parameter_cells(InequalityId id, const SuiteConfig& c) {
  const auto req = requirements(id);
  const std::vector<double> rs = req.uses_r ? c.r_grid : std::vector<double>{1.0};
  const std::vector<double> alphas = req.uses_alpha ? c.alpha_grid : std::vector<double>{0.5};
  std::vector<std::optional<ConvexFunctionSpec>> fs{std::nullopt};
  if (req.uses_f) fs.assign(c.functions.begin(), c.functions.end());
  std::vector<std::optional<NormSpec>> ns{std::nullopt};
  if (req.uses_norm) ns.assign(c.norms.begin(), c.norms.end());

  std::vector<CheckParams> cells;
  for (const auto& f : fs)
    for (const auto& nspec : ns)
      for (double r : rs)
        for (double a : alphas) cells.push_back(CheckParams{r, a, f, nspec});
  return cells;
}

TrialOperands draw_trial(const SuiteConfig& c, std::size_t trial) {
  TrialOperands t;
  t.trial = trial;
  t.seed = derive_seed(c.seed, trial);
  const std::size_t k = c.ensembles.size();
  t.ensemble = c.ensembles[trial % k];
  t.n = c.dims[(trial / k) % c.dims.size()];

  Rng rng(t.seed);
  const std::size_t n = t.n;
  const ComplexMatrix tm = unit_scaled(sample(t.ensemble, n, rng));
  auto [a, b] = jointly_scaled(sample(t.ensemble, n, rng), sample(t.ensemble, n, rng));
  const UnitVector x = random_unit_vector(n, rng);
  auto [pa, pb] = jointly_scaled(sample_hermitian_psd(n, rng), sample_hermitian_psd(n, rng));
  const ComplexMatrix ph = unit_scaled(sample_hermitian_psd(n, rng));
  ComplexVector va = random_complex_vector(n, rng);
  ComplexVector vb = random_complex_vector(n, rng);
  const UnitVector e = random_unit_vector(n, rng);
  std::exponential_distribution<double> expo(1.0);
  const double sa = expo(rng), sb = expo(rng);

  t.general.t = tm;
  t.general.a = a;
  t.general.b = b;
  t.general.h = real_part(tm);
  t.general.x = x;
  t.general.vec_a = std::move(va);
  t.general.vec_b = std::move(vb);
  t.general.e = e;
  t.general.scalar_a = sa;
  t.general.scalar_b = sb;

  t.psd.a = pa;
  t.psd.b = pb;
  t.psd.h = ph;
  t.psd.x = x;
  return t;
}

RunReport run_suite(const SuiteConfig& config) {
  validate(config);

  std::vector<std::vector<CheckParams>> cells;
  cells.reserve(config.ids.size());
  for (auto id : config.ids) cells.push_back(parameter_cells(id, config));

  std::vector<TrialResult> results(config.trials);
  std::size_t threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, config.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < config.trials; t = next++) results[t] = run_trial(config, cells, t);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  RunReport report;
  report.config = config;
  report.min_slack = std::numeric_limits<double>::infinity();
  for (auto id : config.ids) {
    IdSummary row;
    row.id = id;
    row.min_slack = std::numeric_limits<double>::infinity();
    report.rows.push_back(row);
  }
  for (auto& result : results) {
    for (std::size_t k = 0; k < result.records.size(); ++k) {
      const auto& rec = result.records[k];
      auto& row = report.rows[k];
      ++row.trials;
      row.evaluations += rec.cells;
      row.failures += rec.failures;
      row.errors += rec.errors;
      report.violations += rec.failures;
      report.numerical_errors += rec.errors;
      if (rec.worst && rec.worst->slack < row.min_slack) {
        row.min_slack = rec.worst->slack;
        row.worst_digest = rec.worst->operand_digest;
        row.worst_trial = rec.trial;
      }
      report.min_slack = std::min(report.min_slack, row.min_slack);
    }
    for (auto& f : result.failures) {
      if (report.failures.size() >= kMaxRecordedFailures) break;
      report.failures.push_back(std::move(f));
    }
    std::move(result.records.begin(), result.records.end(), std::back_inserter(report.records));
    result = {};
  }
  return report;
}

}  // namespace numrad
