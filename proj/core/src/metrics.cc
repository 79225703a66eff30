//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#include "molga/metrics.h"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <vector>

#include <nlohmann/json.hpp>

#include "molga/error.h"

namespace molga {
namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::string percent(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f%%", 100.0 * x);
  return buf;
}

}  // namespace

GenerationReport generation_metrics(
    std::span<const std::optional<CanonicalForm>> generated,
    const CanonicalSet &reference) {
  GenerationReport r;
  r.n_generated = generated.size();
  CanonicalSet unique;
  for (const auto &form : generated) {
    if (!form) continue;
    ++r.n_valid;
    if (unique.insert(*form).second && !reference.contains(*form)) ++r.n_novel;
  }
  r.n_unique = unique.size();
  r.validity = ratio(r.n_valid, r.n_generated);
  r.uniqueness = ratio(r.n_unique, r.n_valid);
  r.novelty = ratio(r.n_novel, r.n_unique);
  return r;
}

AucReport auc_top10(std::span<const double> history, std::size_t budget,
                    std::size_t k) {
  if (history.empty()) throw Error(ErrorCode::kEmptyHistory, "AUC of an empty history");
  if (history.size() > budget) {
    throw Error(ErrorCode::kConfigError, "history longer than the budget");
  }
  AucReport r;
  r.running_top10.reserve(history.size());
  // Best scores so far, descending. The sum is recomputed in this order on
  // every change so the result does not depend on arrival order.
  std::vector<double> top;
  top.reserve(k + 1);
  double t = 0.0;
  double area = 0.0;
  for (double s : history) {
    if (top.size() < k || s > top.back()) {
      top.insert(std::upper_bound(top.begin(), top.end(), s, std::greater<>()), s);
      if (top.size() > k) top.pop_back();
      double sum = 0.0;
      for (double x : top) sum += x;
      t = sum / static_cast<double>(top.size());
    }
    r.running_top10.push_back(t);
    area += t;
  }
  r.final_top10_mean = t;
  for (std::size_t i = history.size(); i < budget; ++i) area += t;
  r.auc_top10 = area / static_cast<double>(budget);
  return r;
}

std::string to_json(const GenerationReport &r) {
  nlohmann::ordered_json j;
  j["n_generated"] = r.n_generated;
  j["n_valid"] = r.n_valid;
  j["n_unique"] = r.n_unique;
  j["n_novel"] = r.n_novel;
  j["validity"] = r.validity;
  j["uniqueness"] = r.uniqueness;
  j["novelty"] = r.novelty;
  return j.dump();
}

std::string to_json(const AucReport &r, bool include_curve) {
  nlohmann::ordered_json j;
  j["auc_top10"] = r.auc_top10;
  j["final_top10_mean"] = r.final_top10_mean;
  if (include_curve) j["running_top10"] = r.running_top10;
  return j.dump();
}

std::string generation_table_header() {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%-16s %10s %12s %11s", "Method", "Validity",
                "Novelty@10k", "Uniqueness");
  return buf;
}

std::string generation_table_row(std::string_view method, const GenerationReport &r) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-16.*s %10s %12s %11s",
                static_cast<int>(method.size()), method.data(),
                percent(r.validity).c_str(), percent(r.novelty).c_str(),
                percent(r.uniqueness).c_str());
  return buf;
}

std::string auc_table_header() {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%-32s %12s %14s", "Task", "AUC top-10", "Top-10 mean");
  return buf;
}

std::string auc_table_row(std::string_view task, const AucReport &r) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-32.*s %12.3f %14.3f", static_cast<int>(task.size()),
                task.data(), r.auc_top10, r.final_top10_mean);
  return buf;
}

}  // namespace molga
