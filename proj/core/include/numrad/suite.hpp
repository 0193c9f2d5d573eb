#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "numrad/convex_function.hpp"
#include "numrad/ensemble.hpp"
#include "numrad/inequality.hpp"
#include "numrad/norms.hpp"

namespace numrad {

inline constexpr std::string_view kSuiteVersion = "1";

struct SuiteConfig {
  std::vector<EnsembleKind> ensembles{EnsembleKind::Ginibre, EnsembleKind::Normal, EnsembleKind::Nilpotent};
  std::vector<std::size_t> dims{2, 3, 4, 5, 6, 7, 8};
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  std::vector<InequalityId> ids{all_inequality_ids().begin(), all_inequality_ids().end()};
  std::vector<double> r_grid{1.0, 1.5, 2.0, 3.0};
  std::vector<double> alpha_grid{0.1, 0.3, 0.5, 0.7, 0.9};
  std::vector<ConvexFunctionSpec> functions = default_function_registry();
  std::vector<NormSpec> norms{NormSpec::operator_norm(), NormSpec::trace(), NormSpec::frobenius(),
                              NormSpec::schatten(4.0), NormSpec::ky_fan(2)};
  Tolerances tolerances{};
  std::size_t threads = 0;  // 0: one per hardware thread
  /// Harness self-test: evaluates this id with its chain reversed.
  std::optional<InequalityId> inject_reversed;
};

/// Throws InvalidArgument for empty lists, trials == 0, r < 1, alpha outside
/// [0.05, 0.95], dimensions < 2, Ky Fan k above the smallest dimension, or an
/// exponent 2r/alpha beyond kMaxMatrixExponent.
void validate(const SuiteConfig& config);

/// Operands drawn for one trial. T is scaled to unit norm and (A, B) by
/// max(||A||, ||B||); every catalog id is homogeneous in the power forms, and
/// the scaling keeps the f forms away from overflow.
struct TrialOperands {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  EnsembleKind ensemble = EnsembleKind::Ginibre;
  std::size_t n = 0;
  Operands general;  // A, B, T, H = Re T, x, vectors, scalars
  Operands psd;      // PSD A, B and H, same x
};

TrialOperands draw_trial(const SuiteConfig& config, std::size_t trial);

/// Worst parameter cell of one (id, trial).
struct TrialRecord {
  InequalityId id = InequalityId::Eq38Lower;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  EnsembleKind ensemble = EnsembleKind::Ginibre;
  std::size_t n = 0;
  std::size_t cells = 0;
  std::size_t failures = 0;
  std::size_t errors = 0;
  std::optional<InequalityReport> worst;  // smallest slack among evaluated cells
  std::string error;                      // first numerical error, if any
};

struct FailureRecord {
  InequalityId id = InequalityId::Eq38Lower;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  EnsembleKind ensemble = EnsembleKind::Ginibre;
  std::size_t n = 0;
  CheckParams params;
  std::string operand_digest;
  std::vector<double> chain;
  double slack = 0.0;
  std::string error;  // non-empty for numerical failures
};

struct IdSummary {
  InequalityId id = InequalityId::Eq38Lower;
  std::size_t trials = 0;
  std::size_t evaluations = 0;
  std::size_t failures = 0;
  std::size_t errors = 0;
  double min_slack = 0.0;
  std::string worst_digest;
  std::size_t worst_trial = 0;
};

struct RunReport {
  SuiteConfig config;
  std::vector<IdSummary> rows;          // in config.ids order
  std::vector<TrialRecord> records;     // trial-major, then id order
  std::vector<FailureRecord> failures;  // first kMaxRecordedFailures, trial order
  std::size_t violations = 0;
  std::size_t numerical_errors = 0;
  double min_slack = 0.0;

  std::vector<InequalityId> violated_ids() const;
};

inline constexpr std::size_t kMaxRecordedFailures = 1000;

/// Runs every (trial, id, parameter cell). Trials run in parallel; results
/// are aggregated in trial order, so the report does not depend on the thread
/// count. Evaluation errors are recorded, never thrown.
RunReport run_suite(const SuiteConfig& config);

/// Parameter cells an id is evaluated on under a config.
std::vector<CheckParams> parameter_cells(InequalityId id, const SuiteConfig& config);

}  // namespace numrad
