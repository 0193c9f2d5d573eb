#include "numrad_cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <ostream>
#include <vector>

#include "numrad/errors.hpp"
#include "numrad/inequality.hpp"
#include "numrad/norms.hpp"
#include "numrad/radius.hpp"
#include "numrad/report_io.hpp"
#include "numrad/spectral.hpp"
#include "numrad/suite.hpp"
#include "numrad_cli/matrix_file.hpp"

namespace numrad::cli {
namespace {

std::string fmt(double v, int digits = 12) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

// Maps library exceptions onto exit statuses.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NonConvergence& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const DomainError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace

int cmd_radius(const RadiusOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto t = load_matrix(opts.input);
    const auto result = opts.norm ? generalized_numerical_radius(t, NormSpec::parse(*opts.norm), opts.tol)
                                  : numerical_radius(t, opts.tol);
    if (opts.json) {
      nlohmann::ordered_json j;
      j["value"] = result.value;
      j["theta_star"] = result.theta_star;
      j["certified_error"] = result.certified_error;
      j["evaluations"] = result.evaluations;
      out << j.dump(2) << "\n";
    } else {
      out << (opts.norm ? "w_" + *opts.norm : std::string("w")) << " = " << fmt(result.value, 17) << "\n"
          << "theta_star = " << fmt(result.theta_star) << "\n"
          << "certified_error = " << fmt(result.certified_error, 3) << "\n"
          << "evaluations = " << result.evaluations << "\n";
    }
    return kExitOk;
  });
}

int cmd_norms(const NormsOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto t = load_matrix(opts.input);
    const auto sv = singular_values(t);
    std::vector<NormSpec> specs{NormSpec::operator_norm(), NormSpec::trace(), NormSpec::frobenius()};
    if (opts.all) {
      specs.push_back(NormSpec::schatten(3.0));
      for (std::size_t k = 1; k <= t.size(); ++k) specs.push_back(NormSpec::ky_fan(k));
    }
    for (const auto& s : specs) {
      const auto name = s.to_string();
      out << name << std::string(name.size() < 12 ? 12 - name.size() : 1, ' ') << fmt(s.from_singular_values(sv), 15)
          << "\n";
    }
    return kExitOk;
  });
}

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.format != "json" && opts.format != "csv") throw InvalidArgument("--format must be json or csv");
    SuiteConfig config = opts.suite == "default" ? SuiteConfig{} : config_from_json(read_file(opts.suite));
    if (opts.seed) config.seed = *opts.seed;
    if (opts.trials) config.trials = *opts.trials;
    if (opts.threads) config.threads = *opts.threads;
    if (opts.inject_bug) config.inject_reversed = parse_inequality_id(*opts.inject_bug);

    const RunReport report = run_suite(config);
    const std::string doc = opts.format == "json" ? report_to_json(report) : report_to_csv(report);
    std::ostream& summary = opts.out ? out : err;
    if (opts.out) write_file(*opts.out, doc);
    else out << doc;

    std::size_t evaluations = 0;
    for (const auto& row : report.rows) evaluations += row.evaluations;
    summary << "trials " << config.trials << ", evaluations " << evaluations << ", violations " << report.violations
            << ", numerical errors " << report.numerical_errors << ", min slack " << fmt(report.min_slack, 6) << "\n";
    for (const auto& row : report.rows) {
      if (row.failures == 0 && row.errors == 0) continue;
      summary << (row.failures ? "VIOLATION " : "ERROR ") << to_string(row.id) << ": " << row.failures
              << " failures, " << row.errors << " errors, worst trial " << row.worst_trial << " digest "
              << row.worst_digest << "\n";
    }
    if (report.violations) return kExitViolation;
    if (report.numerical_errors) return kExitNumerical;
    return kExitOk;
  });
}

int cmd_paper_examples(std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    struct Row {
      const char* label;
      double computed;
      double quoted;
      double tol;
    };

    Operands pair;
    pair.a = ComplexMatrix{{0, 1}, {0, 2}};
    pair.b = ComplexMatrix{{2, 0}, {1, 0}};
    const auto c44 = evaluate_check(InequalityId::Chain44, pair, CheckParams{});

    Operands single;
    single.t = ComplexMatrix{{2, 1}, {0, 1}};
    const auto c35 = evaluate_check(InequalityId::Chain35, single, CheckParams{});

    // The quoted 5.0712 is truncated (exact value 5.07132...), hence the wider tolerance.
    const Row rows[] = {
        {"Example 1  w^2(B*A)", c44.chain[0], 4.0, 1e-4},
        {"Example 1  w(|B|^2|A|^2)/2 + |||A|^4+|B|^4||/4", c44.chain[1], 6.25, 1e-4},
        {"Example 1  |||A|^4+|B|^4||/2", c44.chain[2], 12.5, 1e-4},
        {"Example 2  w^2(T)", c35.chain[0], 4.87132, 1e-4},
        {"Example 2  w(|T||T*|)/2 + |||T|^2+|T*|^2||/4", c35.chain[1], 5.0712, 1e-3},
        {"Example 2  |||T|^2+|T*|^2||/2", c35.chain[2], 5.12132, 1e-4},
    };

    bool ok = true;
    for (const auto& r : rows) {
      const bool match = std::abs(r.computed - r.quoted) <= r.tol;
      ok = ok && match;
      char line[160];
      std::snprintf(line, sizeof line, "%-48s %14.9f  expected %-8g %s\n", r.label, r.computed, r.quoted,
                    match ? "ok" : "MISMATCH");
      out << line;
    }
    const bool ordered1 = c44.chain[0] < c44.chain[1] && c44.chain[1] < c44.chain[2];
    const bool ordered2 = c35.chain[0] < c35.chain[1] && c35.chain[1] < c35.chain[2];
    out << "Example 1 ordering " << (ordered1 ? "ok" : "BROKEN") << "\n"
        << "Example 2 ordering " << (ordered2 ? "ok" : "BROKEN") << "\n";
    return ok && ordered1 && ordered2 ? kExitOk : kExitViolation;
  });
}

}  // namespace numrad::cli
