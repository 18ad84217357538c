#include <CLI11.hpp>
#include <iostream>

#include "idtrade/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Information-disturbance tradeoff for direction-encoding spin pairs"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string mode_name = "antiparallel";
  idt::GlobalOptions opts;
  std::size_t mc_samples = 0;
  std::string out_path;
  app.add_option("--mode", mode_name, "Encoding: antiparallel or parallel")
      ->check(CLI::IsMember({"antiparallel", "parallel"}));
  app.add_option("--seed", opts.seed, "Seed for the random source");
  auto* mc_opt = app.add_option("--mc-samples", mc_samples, "Monte Carlo samples")
                     ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 40));
  auto* out_opt = app.add_option("--out", out_path, "CSV output path (default: stdout)");
  app.add_flag("--paper-coefficients", opts.paper_coefficients,
               "Use the uncorrected family coefficient and U1; report violations");

  std::string seed_path;
  auto* validate = app.add_subcommand("validate", "Check the trace condition of a seed file");
  validate->add_option("path", seed_path, "Seed JSON file")->required();

  auto* evaluate = app.add_subcommand("evaluate", "Information and disturbance of a seed file");
  evaluate->add_option("path", seed_path, "Seed JSON file")->required();

  int points = 9;
  auto* sweep = app.add_subcommand("sweep", "Tabulate the minimal-disturbance family");
  sweep->add_option("--points", points, "Number of points");

  int compare_points = 9;
  int restarts = 20;
  auto* compare = app.add_subcommand("compare", "Antiparallel vs parallel frontier");
  compare->add_option("--points", compare_points, "Number of information values");
  compare->add_option("--restarts", restarts, "Optimizer random restarts");

  auto* povm4 = app.add_subcommand("povm4-check", "Check the four-outcome discrete POVM");
  auto* povm4_path = povm4->add_option("path", seed_path, "Seed JSON file (optional)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : idt::kExitIoError;
  }

  opts.mode = idt::parse_encoding_mode(mode_name);
  if (*mc_opt) opts.mc_samples = mc_samples;
  if (*out_opt) opts.out = out_path;

  try {
    if (*validate) return idt::cmd_validate(seed_path, opts, std::cout, std::cerr);
    if (*evaluate) return idt::cmd_evaluate(seed_path, opts, std::cout, std::cerr);
    if (*sweep) return idt::cmd_sweep(points, opts, std::cout, std::cerr);
    if (*compare) return idt::cmd_compare(compare_points, restarts, opts, std::cout, std::cerr);
    if (*povm4) {
      std::optional<std::string> path;
      if (*povm4_path) path = seed_path;
      return idt::cmd_povm4_check(path, opts, std::cout, std::cerr);
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return idt::kExitDomainFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return idt::kExitDomainFailure;
  }
  return idt::kExitIoError;
}
