//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "molga_cli/cli.h"

int main(int argc, char **argv) {
  using namespace molga::cli;
  CLI::App app{"molga: genetic algorithm benchmarks on molecular graphs"};

  std::optional<std::string> mode, config, reference, oracle, out;
  std::optional<std::size_t> budget, offspring, population, n;
  std::optional<std::uint64_t> seed;
  app.add_option("--mode", mode, "optimize | generate | addcarbon-baseline");
  app.add_option("--config", config, "JSON run configuration");
  app.add_option("--reference", reference, "reference SMILES file");
  app.add_option("--oracle", oracle, "oracle spec, e.g. rediscovery:<SMILES>");
  app.add_option("--budget", budget, "distinct oracle evaluations");
  app.add_option("--offspring-size", offspring, "children per generation");
  app.add_option("--population-size", population, "population capacity");
  app.add_option("--seed", seed, "run seed");
  app.add_option("--n", n, "molecules to generate");
  app.add_option("--out", out, "output directory");
  CLI11_PARSE(app, argc, argv);

  RunManifest m;
  try {
    if (config) apply_config_file(*config, m);
    if (mode) m.mode = mode_from_string(*mode);
  } catch (const molga::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
  if (reference) m.reference_path = *reference;
  if (oracle) m.oracle = *oracle;
  if (out) m.out_dir = *out;
  if (budget) m.ga.budget = *budget;
  if (offspring) m.ga.offspring_size = *offspring;
  if (population) m.ga.population_size = *population;
  if (seed) m.ga.rng_seed = *seed;
  if (n) m.n = *n;
  return run_manifest(m, std::cerr);
}
