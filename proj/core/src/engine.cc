//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#include "molga/engine.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <utility>

#include <nlohmann/json.hpp>

#include "molga/error.h"
#include "molga/smiles.h"
#include "parallel.h"

namespace molga {
namespace {

double checked_score(const Oracle &oracle, const MolGraph &g) {
  const double s = oracle(g);
  if (!std::isfinite(s)) {
    throw Error(ErrorCode::kOracleFailure,
                "oracle " + oracle.name() + " returned a non-finite score");
  }
  return s;
}

std::vector<double> score_all(const Oracle &oracle, std::span<const MolGraph *const> graphs,
                              unsigned threads) {
  std::vector<double> scores(graphs.size());
  internal::parallel_for(graphs.size(), oracle.thread_safe() ? threads : 1u,
                         [&](std::size_t i) { scores[i] = checked_score(oracle, *graphs[i]); });
  return scores;
}

}  // namespace

bool ranks_before(const ScoredMol &a, const ScoredMol &b) {
  if (a.score != b.score) return a.score > b.score;
  return a.canonical < b.canonical;
}

Population Population::from_members(std::vector<ScoredMol> members,
                                     std::size_t capacity) {
  Population p(capacity);
  std::vector<ScoredMol> unique;
  unique.reserve(members.size());
  for (ScoredMol &m : members) {
    if (p.index_.emplace(m.canonical.smiles, m.score).second) unique.push_back(std::move(m));
  }
  std::sort(unique.begin(), unique.end(), ranks_before);
  if (unique.size() > capacity) {
    for (std::size_t i = capacity; i < unique.size(); ++i) {
      p.index_.erase(unique[i].canonical.smiles);
    }
    unique.erase(unique.begin() + static_cast<std::ptrdiff_t>(capacity), unique.end());
  }
  p.members_ = std::move(unique);
  return p;
}

std::optional<double> Population::score_of(const CanonicalForm &c) const {
  auto it = index_.find(c.smiles);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

BudgetLedger::BudgetLedger(std::size_t limit) : limit_(limit) {}

std::optional<double> BudgetLedger::cached(const CanonicalForm &c) const {
  if (auto it = counted_.find(c.smiles); it != counted_.end()) return it->second;
  if (auto it = uncounted_.find(c.smiles); it != uncounted_.end()) return it->second;
  return std::nullopt;
}

std::size_t BudgetLedger::record(EvaluationRecord rec) {
  if (exhausted()) throw Error(ErrorCode::kBudgetExhausted, "oracle budget exhausted");
  if (cached(rec.canonical)) {
    throw Error(ErrorCode::kConfigError, "molecule already scored: " + rec.canonical.smiles);
  }
  rec.eval_index = history_.size() + 1;
  counted_.emplace(rec.canonical.smiles, rec.score);
  history_.push_back(std::move(rec));
  return history_.back().eval_index;
}

void BudgetLedger::remember(const CanonicalForm &c, double score) {
  uncounted_.emplace(c.smiles, score);
}

std::vector<double> BudgetLedger::score_history() const {
  std::vector<double> out;
  out.reserve(history_.size());
  for (const EvaluationRecord &r : history_) out.push_back(r.score);
  return out;
}

void GAConfig::validate() const {
  auto fail = [](const std::string &why) { throw Error(ErrorCode::kConfigError, why); };
  if (population_size < 2) fail("population_size must be >= 2");
  if (offspring_size < 1) fail("offspring_size must be >= 1");
  if (budget < 1) fail("budget must be >= 1");
  if (count_initial_evaluations && population_size > budget) {
    fail("population_size must not exceed the budget");
  }
  double total = 0.0;
  for (double w : genops.edit_weights) {
    if (!(w >= 0.0)) fail("edit weights must be non-negative");
    total += w;
  }
  if (!(total > 0.0)) fail("at least one edit weight must be positive");
  if (genops.substitution_elements.empty()) fail("substitution element list is empty");
  for (double p : {genops.crossover_probability, genops.mutate_after_crossover}) {
    if (!(p >= 0.0 && p <= 1.0)) fail("probabilities must be in [0, 1]");
  }
  if (genops.max_attempts < 1) fail("max_attempts must be >= 1");
  if (!(sampler.min_exponent <= 0.0)) fail("sampler.min_exponent must be <= 0");
  if (start_source == StartSource::kTargetVariants) {
    if (!start_seed_smiles) fail("start.seed is required for target variants");
    if (start_variant_edits < 1) fail("start.variant_edits must be >= 1");
  }
  if (max_stall_steps < 1) fail("max_stall_steps must be >= 1");
  if (threads < 1) fail("threads must be >= 1");
}

std::vector<MolGraph> mutated_variants(const MolGraph &seed, std::size_t count,
                                       int edits, Rng &rng,
                                       const GenopsConfig &config) {
  std::vector<MolGraph> out;
  CanonicalSet seen = {canonical_form(seed)};
  const std::size_t max_tries = 1000 * std::max<std::size_t>(count, 1);
  for (std::size_t tries = 0; out.size() < count && tries < max_tries; ++tries) {
    MolGraph g = seed;
    for (int e = 0; e < edits; ++e) g = mutate(g, rng, config).graph;
    if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
  }
  return out;
}

Population init_population(std::span<const MolGraph> reference, const Oracle &oracle,
                           const GAConfig &config, BudgetLedger &ledger, Rng &rng) {
  if (reference.empty()) throw Error(ErrorCode::kEmptyReference, "empty reference set");
  std::vector<std::size_t> order(reference.size());
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);

  std::vector<CanonicalForm> forms;
  std::vector<const MolGraph *> graphs;
  CanonicalSet seen;
  for (std::size_t idx : order) {
    if (graphs.size() >= config.population_size) break;
    CanonicalForm c = canonical_form(reference[idx]);
    if (!seen.insert(c).second || ledger.cached(c)) continue;
    forms.push_back(std::move(c));
    graphs.push_back(&reference[idx]);
  }
  if (config.count_initial_evaluations && graphs.size() > ledger.remaining()) {
    throw Error(ErrorCode::kBudgetExhausted, "budget too small for the initial population");
  }

  const std::vector<double> scores = score_all(oracle, graphs, config.threads);
  // Ascending commit order keeps the running top-10 mean non-decreasing
  // through the first few evaluations.
  std::vector<std::size_t> commit(graphs.size());
  std::iota(commit.begin(), commit.end(), 0);
  std::sort(commit.begin(), commit.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] < scores[b];
    return forms[a].smiles < forms[b].smiles;
  });
  std::vector<ScoredMol> members;
  members.reserve(graphs.size());
  for (std::size_t i : commit) {
    std::optional<std::size_t> eval_index;
    if (config.count_initial_evaluations) {
      eval_index = ledger.record({0, forms[i], scores[i], "init", {}});
    } else {
      ledger.remember(forms[i], scores[i]);
    }
    members.push_back({forms[i], *graphs[i], scores[i], eval_index});
  }
  return Population::from_members(std::move(members), config.population_size);
}

Population select_population(const Population &current, std::vector<ScoredMol> offspring,
                             std::size_t capacity) {
  std::vector<ScoredMol> pool(current.members().begin(), current.members().end());
  pool.insert(pool.end(), std::make_move_iterator(offspring.begin()),
              std::make_move_iterator(offspring.end()));
  return Population::from_members(std::move(pool), capacity);
}

std::vector<Child> breed(const Population &population, std::size_t count,
                         const GAConfig &config, std::uint64_t generation,
                         GenopsStats *stats) {
  if (population.empty()) throw Error(ErrorCode::kEmptyPopulation, "empty population");
  if (count == 0) return {};
  Rng main = Rng::derive(config.rng_seed, generation, 0);
  const std::vector<int> counts = plan_parent_counts(count, main, config.genops);
  const std::size_t total = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  std::vector<std::size_t> ranks =
      sample_batch(population.size(), total, main, config.sampler).ranks;
  main.shuffle(ranks);

  std::vector<std::size_t> first_parent(count);
  for (std::size_t i = 0, at = 0; i < count; at += counts[i], ++i) first_parent[i] = at;

  std::vector<std::optional<Child>> children(count);
  std::vector<GenopsStats> lane_stats(count);
  internal::parallel_for(count, config.threads, [&](std::size_t i) {
    Rng lane = Rng::derive(config.rng_seed, generation, i + 1);
    std::vector<const MolGraph *> parents;
    std::vector<CanonicalForm> parent_forms;
    for (int p = 0; p < counts[i]; ++p) {
      const ScoredMol &m = population.at_rank(ranks[first_parent[i] + p]);
      parents.push_back(&m.graph);
      parent_forms.push_back(m.canonical);
    }
    children[i] = make_child(parents, parent_forms, lane, config.genops, &lane_stats[i]);
  });
  if (stats) {
    for (const GenopsStats &s : lane_stats) *stats += s;
  }
  std::vector<Child> out;
  out.reserve(count);
  for (std::optional<Child> &c : children) out.push_back(std::move(*c));
  return out;
}

StepOutcome step(const Population &population, const Oracle &oracle, const GAConfig &config,
                 BudgetLedger &ledger, std::uint64_t generation, GenopsStats *stats) {
  if (ledger.exhausted()) throw Error(ErrorCode::kBudgetExhausted, "oracle budget exhausted");
  if (population.empty()) throw Error(ErrorCode::kEmptyPopulation, "empty population");

  const std::size_t k = config.offspring_size;
  std::vector<Child> children = breed(population, k, config, generation, stats);
  std::vector<std::optional<CanonicalForm>> forms(k);
  internal::parallel_for(k, config.threads,
                         [&](std::size_t i) { forms[i] = canonical_form(children[i].graph); });

  std::vector<ScoredMol> offspring;
  std::vector<std::size_t> to_score;
  CanonicalSet pending;
  for (std::size_t i = 0; i < k; ++i) {
    const CanonicalForm &c = *forms[i];
    if (population.contains(c) || pending.contains(c)) continue;
    if (const std::optional<double> s = ledger.cached(c)) {
      offspring.push_back({c, children[i].graph, *s, std::nullopt});
      continue;
    }
    if (to_score.size() >= ledger.remaining()) continue;
    pending.insert(c);
    to_score.push_back(i);
  }

  std::vector<const MolGraph *> graphs;
  for (std::size_t i : to_score) graphs.push_back(&children[i].graph);
  const std::vector<double> scores = score_all(oracle, graphs, config.threads);
  for (std::size_t j = 0; j < to_score.size(); ++j) {
    const std::size_t i = to_score[j];
    Child &child = children[i];
    const std::size_t eval_index = ledger.record(
        {0, *forms[i], scores[j], child.provenance.op, child.provenance.parents});
    offspring.push_back({*forms[i], std::move(child.graph), scores[j], eval_index});
  }

  return {select_population(population, std::move(offspring), population.capacity()),
          to_score.size()};
}

RunResult run(const GAConfig &config, const Oracle &oracle,
              std::span<const MolGraph> reference) {
  config.validate();
  BudgetLedger ledger(config.budget);
  Rng init_rng = Rng::derive(config.rng_seed, 0, 0);

  std::vector<MolGraph> variants;
  std::span<const MolGraph> start = reference;
  if (config.start_source == StartSource::kTargetVariants) {
    const MolGraph seed = parse_smiles(*config.start_seed_smiles);
    variants = mutated_variants(seed, config.population_size, config.start_variant_edits,
                                init_rng, config.genops);
    start = variants;
  }

  RunResult result;
  result.budget = config.budget;
  result.oracle_name = oracle.name();
  result.seed = config.rng_seed;
  Population population = init_population(start, oracle, config, ledger, init_rng);

  std::size_t stall = 0;
  std::uint64_t generation = 1;
  while (!ledger.exhausted()) {
    StepOutcome out = step(population, oracle, config, ledger, generation++, &result.stats);
    population = std::move(out.population);
    ++result.steps;
    stall = out.fresh_evaluations == 0 ? stall + 1 : 0;
    if (stall >= config.max_stall_steps) {
      result.stalled = true;
      break;
    }
  }
  result.final_population = std::move(population);
  result.history = ledger.history();
  return result;
}

AucReport run_auc(const RunResult &result) {
  std::vector<double> scores;
  scores.reserve(result.history.size());
  for (const EvaluationRecord &r : result.history) scores.push_back(r.score);
  return auc_top10(scores, result.budget);
}

void write_jsonl(const RunResult &result, std::ostream &out) {
  for (const EvaluationRecord &r : result.history) {
    nlohmann::ordered_json j;
    j["eval_index"] = r.eval_index;
    j["canonical"] = r.canonical.smiles;
    j["score"] = r.score;
    j["operator"] = r.op;
    nlohmann::ordered_json parents = nlohmann::ordered_json::array();
    for (const CanonicalForm &p : r.parents) parents.push_back(p.smiles);
    j["parents"] = std::move(parents);
    out << j.dump() << '\n';
  }
  nlohmann::ordered_json s;
  s["oracle"] = result.oracle_name;
  s["seed"] = result.seed;
  s["budget"] = result.budget;
  s["evaluations"] = result.history.size();
  s["steps"] = result.steps;
  s["stalled"] = result.stalled;
  if (!result.history.empty()) {
    const AucReport auc = run_auc(result);
    s["auc_top10"] = auc.auc_top10;
    s["top10_mean"] = auc.final_top10_mean;
  }
  if (!result.final_population.empty()) {
    const ScoredMol &best = result.final_population.at_rank(0);
    s["best_score"] = best.score;
    s["best"] = best.canonical.smiles;
  }
  s["final_population_size"] = result.final_population.size();
  nlohmann::ordered_json ops;
  for (EditKind k : kAllEditKinds) {
    ops[std::string(to_string(k))] = result.stats.applied[static_cast<std::size_t>(k)];
  }
  ops["identity_mutations"] = result.stats.identity_mutations;
  ops["crossovers"] = result.stats.crossovers;
  ops["crossover_fallbacks"] = result.stats.crossover_fallbacks;
  s["operator_stats"] = std::move(ops);
  nlohmann::ordered_json summary;
  summary["summary"] = std::move(s);
  out << summary.dump() << '\n';
}

}  // namespace molga
