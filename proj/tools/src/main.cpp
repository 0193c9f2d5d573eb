#include <CLI11.hpp>
#include <iostream>

#include "numrad_cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace numrad::cli;
  CLI::App app{"Numerical radius bounds: radii, norms and inequality suites"};
  app.require_subcommand(1);

  RadiusOptions radius;
  auto* radius_cmd = app.add_subcommand("radius", "Certified numerical radius of a matrix file");
  radius_cmd->add_option("input", radius.input, "Matrix JSON file")->required();
  radius_cmd->add_option("--norm", radius.norm, "Generalized radius for a norm: op, trace, fro, schatten:p, kyfan:k");
  radius_cmd->add_option("--tol", radius.tol, "Certified absolute error")->check(CLI::PositiveNumber);
  radius_cmd->add_flag("--json", radius.json, "Emit JSON");

  NormsOptions norms;
  auto* norms_cmd = app.add_subcommand("norms", "Unitarily invariant norms of a matrix file");
  norms_cmd->add_option("input", norms.input, "Matrix JSON file")->required();
  norms_cmd->add_flag("--all", norms.all, "Include Schatten-3 and every Ky Fan norm");

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Run the inequality suite");
  check_cmd->add_option("--suite", check.suite, "\"default\" or a suite config JSON file");
  check_cmd->add_option("--seed", check.seed, "Master seed");
  check_cmd->add_option("--trials", check.trials, "Number of trials");
  check_cmd->add_option("--out", check.out, "Report path (default: stdout)");
  check_cmd->add_option("--format", check.format, "json or csv");
  check_cmd->add_option("--inject-bug", check.inject_bug, "Harness self-test: reverse this inequality id");
  check_cmd->add_option("--threads", check.threads, "Worker threads (default: all cores)");

  auto* examples_cmd = app.add_subcommand("paper-examples", "Recompute the two worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*radius_cmd) return cmd_radius(radius, std::cout, std::cerr);
  if (*norms_cmd) return cmd_norms(norms, std::cout, std::cerr);
  if (*check_cmd) return cmd_check(check, std::cout, std::cerr);
  if (*examples_cmd) return cmd_paper_examples(std::cout, std::cerr);
  return kExitUsage;
}
