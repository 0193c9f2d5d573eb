#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace numrad::cli {

enum ExitStatus : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitUsage = 2,    // bad flags, unreadable or malformed input
  kExitNumerical = 3 // eigensolver or optimizer failure
};

struct RadiusOptions {
  std::string input;
  std::optional<std::string> norm;  // canonical norm string; omitted: classical radius
  double tol = 1e-10;
  bool json = false;
};

struct NormsOptions {
  std::string input;
  bool all = false;  // adds Schatten-3 and every Ky Fan k <= n
};

struct CheckOptions {
  std::string suite = "default";  // "default" or a JSON config path
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<std::string> out;  // report path; stdout when absent
  std::string format = "json";     // json | csv
  std::optional<std::string> inject_bug;
  std::optional<std::size_t> threads;
};

int cmd_radius(const RadiusOptions& opts, std::ostream& out, std::ostream& err);
int cmd_norms(const NormsOptions& opts, std::ostream& out, std::ostream& err);
int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err);
int cmd_paper_examples(std::ostream& out, std::ostream& err);

}  // namespace numrad::cli
