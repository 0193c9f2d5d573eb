#pragma once

#include <string>
#include <string_view>

#include "numrad/suite.hpp"

namespace numrad {

inline constexpr std::string_view kReportSchema = "numrad-report/1";

/// Versioned JSON report: schema, suite version, config echo (without the
/// thread count), totals, per-id rows and recorded failures. Doubles use the
/// shortest round-trip form; non-finite values become null. Contains nothing
/// run-dependent, so equal configs give byte-identical documents.
std::string report_to_json(const RunReport& report);

/// One row per (id, trial) describing the worst parameter cell; doubles are
/// printed with 17 significant digits.
std::string report_to_csv(const RunReport& report);

/// The config echo used inside reports.
std::string config_to_json(const SuiteConfig& config);

/// Reads a suite config. Every key is optional and overrides the default:
/// ensembles, dims, trials, seed, ids, r_grid, alpha_grid, functions, norms,
/// tolerances {abs, rel, radius}. Unknown keys and malformed values throw
/// InvalidArgument.
SuiteConfig config_from_json(std::string_view text);

}  // namespace numrad
