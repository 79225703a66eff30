//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGA_ENGINE_H_
#define MOLGA_ENGINE_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "molga/canonical.h"
#include "molga/genops.h"
#include "molga/metrics.h"
#include "molga/molgraph.h"
#include "molga/oracles.h"
#include "molga/random.h"
#include "molga/sampler.h"

namespace molga {

struct ScoredMol {
  CanonicalForm canonical;
  MolGraph graph;
  double score = 0.0;
  // Ledger counter value at which it was scored; empty for uncounted scores.
  std::optional<std::size_t> eval_index;
};

// Ordering used for ranking and greedy selection: score descending, then
// canonical form ascending.
bool ranks_before(const ScoredMol &a, const ScoredMol &b);

// Members unique by canonical form, kept sorted best first.
class Population {
 public:
  explicit Population(std::size_t capacity) : capacity_(capacity) {}

  // Builds from arbitrary members: deduplicates, sorts, truncates.
  static Population from_members(std::vector<ScoredMol> members, std::size_t capacity);

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<ScoredMol> &members() const { return members_; }
  const ScoredMol &at_rank(std::size_t rank) const { return members_[rank]; }
  bool contains(const CanonicalForm &c) const { return index_.contains(c.smiles); }
  std::optional<double> score_of(const CanonicalForm &c) const;

 private:
  std::size_t capacity_;
  std::vector<ScoredMol> members_;
  std::unordered_map<std::string, double> index_;
};

struct EvaluationRecord {
  std::size_t eval_index = 0;  // 1-based
  CanonicalForm canonical;
  double score = 0.0;
  std::string op;
  std::vector<CanonicalForm> parents;
};

// Counts distinct oracle evaluations. A canonical form is scored at most
// once; cache hits are free.
class BudgetLedger {
 public:
  explicit BudgetLedger(std::size_t limit);

  std::size_t limit() const { return limit_; }
  std::size_t used() const { return history_.size(); }
  std::size_t remaining() const { return limit_ - used(); }
  bool exhausted() const { return used() >= limit_; }

  std::optional<double> cached(const CanonicalForm &c) const;

  // Records a fresh evaluation and returns its eval_index. Throws
  // BudgetExhausted when no budget is left and ConfigError for a form that
  // is already cached.
  std::size_t record(EvaluationRecord record);

  // Score known without spending budget (uncounted initial population).
  void remember(const CanonicalForm &c, double score);

  const std::vector<EvaluationRecord> &history() const { return history_; }
  std::vector<double> score_history() const;
  std::size_t cache_size() const { return counted_.size(); }

 private:
  std::size_t limit_;
  std::vector<EvaluationRecord> history_;
  std::unordered_map<std::string, double> counted_;
  std::unordered_map<std::string, double> uncounted_;
};

enum class StartSource {
  kReference,       // sample population_size molecules from the reference
  kTargetVariants,  // mutated variants of start_seed
};

struct GAConfig {
  std::size_t population_size = 100;
  std::size_t offspring_size = 5;
  std::size_t budget = 10000;
  std::uint64_t rng_seed = 0;
  GenopsConfig genops;
  SamplerConfig sampler;
  StartSource start_source = StartSource::kReference;
  // For kTargetVariants: the molecule mutated and the number of successive
  // edits applied to produce each variant (the seed itself is excluded).
  std::optional<std::string> start_seed_smiles;
  int start_variant_edits = 3;
  bool count_initial_evaluations = true;
  // Steps in a row without a fresh evaluation before the run stops early
  // (the reachable molecule supply is exhausted).
  std::size_t max_stall_steps = 1000;
  unsigned threads = 1;

  // Throws ConfigError.
  void validate() const;
};

// population_size distinct variants of `seed`, each produced by
// `edits` successive mutations; the seed itself never appears.
std::vector<MolGraph> mutated_variants(const MolGraph &seed, std::size_t count,
                                       int edits, Rng &rng,
                                       const GenopsConfig &config = {});

// Scores population_size distinct reference molecules, drawn uniformly with
// `rng`, through the ledger. Throws EmptyReference, BudgetExhausted.
Population init_population(std::span<const MolGraph> reference,
                           const Oracle &oracle, const GAConfig &config,
                           BudgetLedger &ledger, Rng &rng);

// Greedy truncation of current + offspring to capacity.
Population select_population(const Population &current,
                             std::vector<ScoredMol> offspring,
                             std::size_t capacity);

// Samples parents by rank from `population` with one sampler batch and
// builds `count` children. Lane i uses Rng::derive(seed, generation, i + 1);
// the parent plan and sample use lane 0. Runs on config.threads threads.
std::vector<Child> breed(const Population &population, std::size_t count,
                         const GAConfig &config, std::uint64_t generation,
                         GenopsStats *stats = nullptr);

struct StepOutcome {
  Population population;
  std::size_t fresh_evaluations = 0;
};

// One generation: sample parents by rank, make offspring_size children,
// score unseen canonical forms (free for cached ones), select greedily.
// Throws BudgetExhausted if called with no budget left.
StepOutcome step(const Population &population, const Oracle &oracle,
                 const GAConfig &config, BudgetLedger &ledger,
                 std::uint64_t generation, GenopsStats *stats = nullptr);

struct RunResult {
  Population final_population{0};
  std::vector<EvaluationRecord> history;
  std::size_t budget = 0;
  std::size_t steps = 0;
  bool stalled = false;
  GenopsStats stats;
  std::string oracle_name;
  std::uint64_t seed = 0;
};

// Initializes, then steps until the budget is used (or the run stalls).
RunResult run(const GAConfig &config, const Oracle &oracle,
              std::span<const MolGraph> reference);

// AUC over the run's score history.
AucReport run_auc(const RunResult &result);

// One JSON object per line, {eval_index, canonical, score, operator,
// parents} per evaluation, then {"summary": {...}}.
void write_jsonl(const RunResult &result, std::ostream &out);

}  // namespace molga

#endif  // MOLGA_ENGINE_H_
