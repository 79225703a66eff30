//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGA_CLI_CLI_H_
#define MOLGA_CLI_CLI_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "molga/engine.h"
#include "molga/error.h"
#include "molga/metrics.h"
#include "molga/molgraph.h"
#include "molga/oracles.h"

namespace molga::cli {

enum class Mode { kOptimize, kGenerate, kAddCarbonBaseline };

std::string_view to_string(Mode mode);
Mode mode_from_string(std::string_view name);  // throws ConfigError

enum ExitCode : int {
  kExitOk = 0,
  kExitIoError = 1,
  kExitConfigError = 2,
  kExitReferenceError = 3,
  kExitOracleError = 4,
};

struct RunManifest {
  Mode mode = Mode::kOptimize;
  std::optional<std::string> config_path;
  std::optional<std::string> reference_path;
  // Oracle spec: a "kind:argument" string or an object, see build_oracle.
  std::optional<nlohmann::json> oracle;
  std::string out_dir = "out";
  std::size_t n = 10000;  // generate modes
  GAConfig ga;            // ga.rng_seed is the run seed
};

// Overlays the keys present in `config` on `m`. Unknown keys are rejected.
void apply_config(const nlohmann::json &config, RunManifest &m);
void apply_config_file(const std::filesystem::path &path, RunManifest &m);

// A string goes to make_oracle. Objects:
//   {"kind": "isomer", "formula": "C9H8O4", "temperature": 2.0}
//   {"kind": "external", "command": "...", "timeout_ms": 30000}
//   {"kind": "mpo", "name": "...", "components": [{"oracle": <spec>, "weight": w}, ...]}
//   {"kind": <other>, "argument": "..."}  same as "<kind>:<argument>"
// Throws ConfigError.
Oracle build_oracle(const nlohmann::json &spec);

// Resolved manifest including defaults; apply_config(to_json(m)) round-trips.
nlohmann::ordered_json to_json(const RunManifest &m);

// Mode-required fields and GAConfig::validate(). Throws ConfigError.
void validate(const RunManifest &m);

struct Rejection {
  std::size_t line = 0;  // 1-based
  ErrorCode code = ErrorCode::kSyntaxError;
  std::size_t offset = 0;
  std::string smiles;
  std::string message;
};

struct ReferenceSet {
  std::vector<MolGraph> molecules;
  std::vector<std::string> smiles;  // input text for each accepted molecule
  std::vector<Rejection> rejections;
};

// One SMILES per line (first whitespace-separated token). Blank lines and
// lines starting with '#' are skipped. Throws Error(kEmptyReference) when the
// file cannot be read.
ReferenceSet ingest_reference(const std::filesystem::path &path);
ReferenceSet ingest_reference(std::istream &in);

struct GenerateOutput {
  std::vector<std::optional<CanonicalForm>> canonical;  // per generated molecule
  GenerationReport report;
};

// Generation benchmark: one sampler pass and one genops pass over the reference
// as population (addcarbon-baseline: add_carbon on uniformly drawn
// references), then generation_metrics against the reference. Reference
// members carry no score, so they all tie and parents are drawn uniformly.
GenerateOutput generate(const ReferenceSet &reference, const RunManifest &m);

// Run a mode and write its outputs under m.out_dir. Returns an ExitCode;
// diagnostics go to `log`.
int cmd_optimize(const RunManifest &m, std::ostream &log);
int cmd_generate(const RunManifest &m, std::ostream &log);
int run_manifest(const RunManifest &m, std::ostream &log);

// Worker threads from MOLGA_THREADS (default 1).
unsigned threads_from_env();

}  // namespace molga::cli

#endif  // MOLGA_CLI_CLI_H_
