// mcgen: verify torsion and involution generating sets of mapping class
// groups at the symplectic level.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using mcgen::cli::RunConfig;

struct Raw {
  std::string order_cap = "auto";
  std::string cells;
};

void add_common(CLI::App* sub, RunConfig& c, Raw& raw) {
  sub->add_option("--genus", c.genera, "Genus list, e.g. 3,4,5")
      ->delimiter(',')
      ->envname("MCGEN_GENUS")
      ->each([&c](const std::string&) { c.genera_given = true; });
  sub->add_option("--primes", c.primes, "Prime list for generate, e.g. 2,3,5,7")
      ->delimiter(',')
      ->envname("MCGEN_PRIMES")
      ->each([&c](const std::string&) { c.primes_given = true; });
  sub->add_option("--orbit-budget", c.orbit_budget, "Largest basic orbit allowed (points)")
      ->envname("MCGEN_ORBIT_BUDGET");
  sub->add_option("--order-cap", raw.order_cap, "Order search cap, or auto for 12g")
      ->envname("MCGEN_ORDER_CAP");
  sub->add_option("--seed", c.seed, "Seed for randomized stages")->envname("MCGEN_SEED");
  sub->add_option("--out", c.out, "Output path")->envname("MCGEN_OUT");
  sub->add_flag("--json", c.json, "Emit JSON")->envname("MCGEN_JSON");
  sub->add_flag("-v,--verbose", c.verbosity, "More output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mcgen: torsion and involution generators of mapping class groups, "
               "checked in Sp(2g,Z) and Sp(2g,p)"};
  app.require_subcommand(1);
  RunConfig config;
  Raw raw;

  auto* verify = app.add_subcommand("verify", "Check every witness identity as a matrix identity");
  add_common(verify, config, raw);
  verify->add_option("--suite", config.suite, "torsion | involution | all")
      ->check(CLI::IsMember({"torsion", "involution", "all"}))
      ->envname("MCGEN_SUITE");
  verify->add_option("--import", config.import_path, "Re-verify an exported bundle");
  verify->add_option("--negative-control", config.negative_control)
      ->group("")
      ->envname("MCGEN_NEGATIVE_CONTROL");

  auto* orders = app.add_subcommand("orders", "Orders of Q, S, R and the involutions");
  add_common(orders, config, raw);

  auto* generate = app.add_subcommand("generate", "Generation verdicts in Sp(2g,p)");
  add_common(generate, config, raw);
  generate->add_option("--sets", config.sets, "Generating sets to check")->delimiter(',');
  generate->add_option("--cells", raw.cells, "Explicit g:p cells, e.g. 3:2,4:3");

  auto* coxeter = app.add_subcommand("coxeter", "Pairwise product orders of the six involutions");
  add_common(coxeter, config, raw);

  auto* exp = app.add_subcommand("export", "Write the JSON bundle");
  add_common(exp, config, raw);
  exp->add_option("--suite", config.suite, "torsion | involution | all")
      ->check(CLI::IsMember({"torsion", "involution", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : mcgen::cli::kInvalidInput;
  }

  try {
    if (raw.order_cap != "auto") config.order_cap = std::stol(raw.order_cap);
    if (!raw.cells.empty()) config.cells = mcgen::cli::parse_cells(raw.cells);
  } catch (const std::exception& e) {
    std::cerr << "error: bad numeric argument: " << e.what() << '\n';
    return mcgen::cli::kInvalidInput;
  }

  if (*verify) return mcgen::cli::cmd_verify(config, std::cout, std::cerr);
  if (*orders) return mcgen::cli::cmd_orders(config, std::cout, std::cerr);
  if (*generate) return mcgen::cli::cmd_generate(config, std::cout, std::cerr);
  if (*coxeter) return mcgen::cli::cmd_coxeter(config, std::cout, std::cerr);
  return mcgen::cli::cmd_export(config, std::cout, std::cerr);
}
