#include <iostream>

#include <CLI11.hpp>

#include "polyem/cli/cli.hpp"

int main(int argc, char** argv) {
  polyem::cli::JobSpec job;
  CLI::App app{"Exact local Euler-Maclaurin formulas for rational polytopes"};
  app.add_option("command", job.command,
                 "expand | mu | lambda | nu | count | volume | sum | integrate | verify")
      ->required();
  app.add_option("--polytope", job.polytope, "polytope JSON file or inline JSON");
  app.add_option("--cone", job.cone, "cone JSON file or inline JSON");
  app.add_option("--cmap", job.cmap, "complement map JSON (default: standard inner product)");
  int order = -1;
  auto* order_opt = app.add_option("--order", order, "Taylor order");
  app.add_option("--poly", job.poly, "polynomial in x1..xn");
  app.add_option("--format", job.format, "text | json");
  app.add_option("--seed", job.seed, "seed for randomized checks");
  app.add_flag("--constant-term", job.constant_term, "print only the constant term");
  app.add_option("--identity", job.identity,
                 "interpolator | brion | lambda | nu | em | em22 | morelli | mobius | psi-independence | all");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : polyem::cli::kParseError;
  }
  if (*order_opt) job.order = order;
  return polyem::cli::run(job, std::cout, std::cerr);
}
