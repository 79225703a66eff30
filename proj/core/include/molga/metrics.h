//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGA_METRICS_H_
#define MOLGA_METRICS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "molga/canonical.h"

namespace molga {

using CanonicalSet = std::unordered_set<CanonicalForm, CanonicalFormHash>;

// Unconditional-generation metrics with MOSES conventions:
//   validity   = valid / generated
//   uniqueness = unique valid / valid
//   novelty    = unique valid not in reference / unique valid
// Fractions with an empty denominator are reported as 0. Raw counts are kept
// so that other denominators can be recomputed.
struct GenerationReport {
  std::size_t n_generated = 0;
  std::size_t n_valid = 0;
  std::size_t n_unique = 0;
  std::size_t n_novel = 0;
  double validity = 0.0;
  double uniqueness = 0.0;
  double novelty = 0.0;
};

// `generated[i]` is the canonical form of the i-th generated molecule, or
// nullopt if it did not parse into a valid molecule.
GenerationReport generation_metrics(
    std::span<const std::optional<CanonicalForm>> generated,
    const CanonicalSet &reference);

struct AucReport {
  double auc_top10 = 0.0;
  double final_top10_mean = 0.0;
  // running_top10[i]: mean of the best min(10, i + 1) scores among the first
  // i + 1 evaluations.
  std::vector<double> running_top10;
};

// Area under the running top-k mean, normalized by the budget: the mean of
// t_1..t_budget where t_i for i beyond the history repeats the last value.
// Throws EmptyHistory for an empty history and ConfigError when the history
// is longer than the budget.
AucReport auc_top10(std::span<const double> history, std::size_t budget,
                    std::size_t k = 10);

std::string to_json(const GenerationReport &report);
std::string to_json(const AucReport &report, bool include_curve = false);

// Fixed-width rows in the layout of the usual results tables.
std::string generation_table_header();
std::string generation_table_row(std::string_view method, const GenerationReport &r);
std::string auc_table_header();
std::string auc_table_row(std::string_view task, const AucReport &r);

}  // namespace molga

#endif  // MOLGA_METRICS_H_
