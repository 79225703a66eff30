//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGA_ORACLES_H_
#define MOLGA_ORACLES_H_

#include <chrono>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "molga/molgraph.h"

namespace molga {

// Objective f: molecule -> score. Built-in oracles are pure and score in
// [0, 1]; `thread_safe` is false for oracles that talk to a child process.
class Oracle {
 public:
  using Fn = std::function<double(const MolGraph &)>;

  Oracle(std::string name, Fn fn, bool thread_safe = true)
      : name_(std::move(name)), fn_(std::move(fn)), thread_safe_(thread_safe) {}

  const std::string &name() const { return name_; }
  bool thread_safe() const { return thread_safe_; }

  double operator()(const MolGraph &g) const { return fn_(g); }

 private:
  std::string name_;
  Fn fn_;
  bool thread_safe_;
};

inline constexpr double kDefaultIsomerTemperature = 2.0;

// Tanimoto similarity of radius-2 fingerprints to `target`.
Oracle similarity_oracle(const MolGraph &target, std::string name = "similarity");

// exp(-sum_e |count_e(candidate) - count_e(formula)| / temperature), summed
// over the union of elements including hydrogen.
Oracle isomer_oracle(const Formula &formula,
                     double temperature = kDefaultIsomerTemperature);

// Weighted geometric mean of component scores; 0 if any component is 0.
// Throws ConfigError for an empty list or a non-positive weight.
Oracle geometric_mpo(std::vector<std::pair<Oracle, double>> components,
                     std::string name = "mpo");

// exp(-|heavy atoms - target| / scale).
Oracle heavy_atom_oracle(int target, double scale = 2.0);

// exp(-|ring count - target| / scale), ring count being the cyclomatic number.
Oracle ring_count_oracle(int target, double scale = 1.0);

Oracle constant_oracle(double value);

// Line protocol to a child process started with `/bin/sh -c command`: one
// canonical SMILES per line to its stdin, one decimal score per line back.
// A reply that is missing, late or not a finite number throws
// OracleFailure.
Oracle external_oracle(const std::string &command,
                       std::chrono::milliseconds timeout = std::chrono::seconds(30));

// Builds an oracle from "kind:argument":
//   similarity:<SMILES>  rediscovery:<SMILES>  isomer:<formula>
//   heavy_atoms:<n>      rings:<n>             constant:<value>
//   external:<command>
// Throws ConfigError (InvalidMolecule/SmilesError for bad targets).
Oracle make_oracle(std::string_view spec);

}  // namespace molga

#endif  // MOLGA_ORACLES_H_
