// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "auc_oracle.h"
#include "molga/canonical.h"
#include "molga/engine.h"
#include "molga/genops.h"
#include "molga/metrics.h"
#include "molga/oracles.h"
#include "molga/random.h"
#include "molga/sampler.h"
#include "molga/smiles.h"
#include "molga_cli/cli.h"
#include "sampler_oracle.h"
#include "support.h"

namespace fs = std::filesystem;
using namespace molga;

namespace {

// Tolerances.
constexpr std::size_t kGenerateCount = 10000;
constexpr double kGenerateMinUniqueness = 0.95;
constexpr double kGenerateMinNovelty = 0.95;
constexpr double kGenerateMaxSeconds = 60.0;
constexpr double kAddCarbonMinNovelty = 0.99;
constexpr double kAddCarbonNoveltyBand = 0.01;  // around the mean over seeds
constexpr int kAddCarbonSeeds = 5;
constexpr std::size_t kSamplerDraws = 1000000;
constexpr std::size_t kSamplerPopulation = 1000;
constexpr double kSamplerMinP = 0.001;
constexpr std::size_t kMonotoneBins = 20;
constexpr int kRediscoverySeeds = 10;
constexpr int kRediscoveryMinHits = 8;
constexpr double kRediscoveryMaxSeconds = 30.0;
constexpr int kAucHistories = 1000;
constexpr int kCanonGraphs = 1000;
constexpr int kCanonPermutations = 10;
constexpr int kBruteForceMaxAtoms = 7;
constexpr int kFuzzStrings = 100000;

int failures = 0;

void report(const std::string &name, bool ok, const std::string &detail) {
  std::printf("%s %-28s %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char *format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), format, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

fs::path scratch(const std::string &name) {
  const fs::path dir = fs::temp_directory_path() / ("molga_acceptance_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const cli::ReferenceSet &reference_set() {
  static const cli::ReferenceSet r = cli::ingest_reference(testing::data_path("reference_1k.smi"));
  return r;
}

void operator_validity() {
  const fs::path dir = scratch("generate");
  cli::RunManifest m;
  m.mode = cli::Mode::kGenerate;
  m.reference_path = testing::data_path("reference_1k.smi");
  m.n = kGenerateCount;
  m.out_dir = dir.string();
  std::ostringstream log;
  const auto start = std::chrono::steady_clock::now();
  const int code = cli::cmd_generate(m, log);
  const double secs = seconds_since(start);
  if (code != cli::kExitOk) {
    report("generate_validity", false, "exit code " + std::to_string(code) + ": " + log.str());
    return;
  }
  const nlohmann::json r = nlohmann::json::parse(slurp(dir / "report.json"));
  const double validity = r["validity"].get<double>();
  const double uniqueness = r["uniqueness"].get<double>();
  const double novelty = r["novelty"].get<double>();
  const bool ok = r["n_generated"].get<std::size_t>() == kGenerateCount && validity == 1.0 &&
                  uniqueness >= kGenerateMinUniqueness && novelty >= kGenerateMinNovelty &&
                  secs < kGenerateMaxSeconds;
  report("generate_validity", ok,
         fmt("n=%zu validity=%.4f uniqueness=%.4f novelty=%.4f time=%.2fs",
             r["n_generated"].get<std::size_t>(), validity, uniqueness, novelty, secs));
}

void addcarbon_baseline() {
  std::vector<double> novelty;
  bool valid = true;
  for (int seed = 0; seed < kAddCarbonSeeds; ++seed) {
    cli::RunManifest m;
    m.mode = cli::Mode::kAddCarbonBaseline;
    m.n = kGenerateCount;
    m.ga.rng_seed = static_cast<std::uint64_t>(seed);
    const cli::GenerateOutput out = cli::generate(reference_set(), m);
    valid = valid && out.report.validity == 1.0 && out.report.n_generated == kGenerateCount;
    novelty.push_back(out.report.novelty);
  }
  const double mean = std::accumulate(novelty.begin(), novelty.end(), 0.0) / novelty.size();
  const auto [lo, hi] = std::minmax_element(novelty.begin(), novelty.end());
  const bool ok = valid && *lo > kAddCarbonMinNovelty && mean - *lo <= kAddCarbonNoveltyBand &&
                  *hi - mean <= kAddCarbonNoveltyBand;
  report("addcarbon_baseline", ok,
         fmt("seeds=%d validity=%s novelty min=%.4f mean=%.4f max=%.4f", kAddCarbonSeeds,
             valid ? "1.0000" : "<1", *lo, mean, *hi));
}

void sampler_distribution() {
  Rng rng(20240601);
  const SampleSubset s =
      sample_batch(kSamplerPopulation, kSamplerDraws, rng, {SamplerMode::kRandom, -3.0});
  std::vector<std::size_t> counts(kSamplerPopulation, 0);
  for (std::size_t r : s.ranks) ++counts[r];
  const testing::ChiSquared chi =
      testing::chi_squared(counts, testing::rank_mixture(kSamplerPopulation), kSamplerDraws);

  std::vector<std::size_t> bins(kMonotoneBins, 0);
  const std::size_t width = kSamplerPopulation / kMonotoneBins;
  for (std::size_t r = 0; r < kSamplerPopulation; ++r) bins[r / width] += counts[r];
  int violations = 0;
  for (std::size_t i = 0; i + 1 < bins.size(); ++i) violations += bins[i] < bins[i + 1];

  report("sampler_distribution", chi.p_value > kSamplerMinP && violations == 0,
         fmt("draws=%zu chi2=%.1f dof=%zu p=%.4f monotone_violations=%d", kSamplerDraws,
             chi.statistic, chi.dof, chi.p_value, violations));
}

Population population_with_scores(const std::vector<double> &scores) {
  std::vector<ScoredMol> members;
  std::string chain;
  for (double s : scores) {
    chain += "C";
    const MolGraph g = parse_smiles(chain);
    members.push_back({canonical_form(g), g, s, std::nullopt});
  }
  return Population::from_members(std::move(members), scores.size());
}

void rank_only() {
  Rng score_rng(31);
  std::vector<double> raw(100);
  for (double &x : raw) x = score_rng.uniform(0.0, 1.0);
  // Rank transform: each score replaced by its rank among all scores.
  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return raw[a] < raw[b]; });
  std::vector<double> ranked(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) ranked[order[i]] = static_cast<double>(i);

  const Population a = population_with_scores(raw);
  const Population b = population_with_scores(ranked);
  bool same = true;
  for (SamplerMode mode : {SamplerMode::kRandom, SamplerMode::kQuasiGrid}) {
    Rng ra(77), rb(77);
    const SampleSubset sa = sample_batch(a.size(), 100000, ra, {mode, -3.0});
    const SampleSubset sb = sample_batch(b.size(), 100000, rb, {mode, -3.0});
    std::map<std::string, std::size_t> ha, hb;
    for (std::size_t r : sa.ranks) ++ha[a.at_rank(r).canonical.smiles];
    for (std::size_t r : sb.ranks) ++hb[b.at_rank(r).canonical.smiles];
    same = same && ha == hb;
  }
  report("rank_only_dependence", same, "raw vs rank-transformed histograms, both sampler modes");
}

struct TargetLine {
  std::string smiles;
  std::string name;
};

std::vector<TargetLine> targets() {
  std::ifstream in(testing::data_path("targets.smi"));
  std::vector<TargetLine> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    TargetLine t;
    fields >> t.smiles >> t.name;
    out.push_back(t);
  }
  return out;
}

bool nondecreasing(const std::vector<double> &v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] < v[i - 1]) return false;
  }
  return true;
}

// Also feeds the budget check: every run must use exactly its budget.
void rediscovery(bool &budget_ok, std::string &budget_detail) {
  bool all_ok = true;
  std::string detail;
  double slowest = 0.0;
  std::size_t runs = 0, exact = 0;
  for (const TargetLine &t : targets()) {
    int hits = 0;
    bool monotone = true;
    for (int seed = 0; seed < kRediscoverySeeds; ++seed) {
      cli::RunManifest m;
      cli::apply_config_file(testing::data_path("configs/rediscovery.json"), m);
      m.oracle = "rediscovery:" + t.smiles;
      m.ga.start_seed_smiles = t.smiles;
      m.ga.rng_seed = static_cast<std::uint64_t>(seed);
      cli::validate(m);
      const Oracle oracle = cli::build_oracle(*m.oracle);
      const auto start = std::chrono::steady_clock::now();
      const RunResult r = run(m.ga, oracle, {});
      slowest = std::max(slowest, seconds_since(start));
      hits += r.final_population.at_rank(0).score == 1.0;
      monotone = monotone && nondecreasing(run_auc(r).running_top10);
      ++runs;
      exact += r.history.size() == m.ga.budget && !r.stalled;
    }
    const bool ok = hits >= kRediscoveryMinHits && monotone;
    all_ok = all_ok && ok;
    detail += fmt("%s=%d/%d%s ", t.name.c_str(), hits, kRediscoverySeeds, monotone ? "" : "(non-monotone)");
  }
  all_ok = all_ok && slowest < kRediscoveryMaxSeconds;
  detail += fmt("slowest=%.2fs", slowest);
  report("rediscovery", all_ok, detail);

  // Supply-limited run: only C, N and O are reachable from methane.
  GAConfig small;
  small.population_size = 2;
  small.budget = 10;
  small.max_stall_steps = 50;
  small.genops.edit_weights.fill(0.0);
  small.genops.edit_weights[static_cast<std::size_t>(EditKind::kSubstituteElement)] = 1.0;
  small.genops.substitution_elements = {Element::kC, Element::kN, Element::kO};
  small.genops.crossover_probability = 0.0;
  const std::vector<MolGraph> methane = {parse_smiles("C")};
  const RunResult limited = run(small, constant_oracle(0.5), methane);
  const bool supply_ok = limited.history.size() == 3 && limited.stalled;
  budget_ok = exact == runs && supply_ok;
  budget_detail = fmt("full-budget runs %zu/%zu, supply-limited history=%zu (expect 3)", exact,
                      runs, limited.history.size());
}

void budget_ledger_invariants(bool &ok, std::string &detail) {
  GAConfig config;
  config.budget = 1000;
  config.rng_seed = 5;
  const Oracle f = similarity_oracle(parse_smiles("CC(=O)Oc1ccccc1C(=O)O"));
  BudgetLedger ledger(config.budget);
  Rng rng = Rng::derive(config.rng_seed, 0, 0);
  Population p = init_population(testing::reference_molecules(), f, config, ledger, rng);
  bool safe = true;
  for (std::uint64_t gen = 1; !ledger.exhausted(); ++gen) {
    p = step(p, f, config, ledger, gen).population;
    safe = safe && ledger.used() <= ledger.limit() && ledger.used() == ledger.history().size();
  }
  ok = ok && safe && ledger.used() == config.budget;
  detail += fmt(", stepwise ledger used=%zu limit=%zu", ledger.used(), ledger.limit());
}

void auc_correctness() {
  Rng rng(404);
  int mismatches = 0;
  for (int t = 0; t < kAucHistories; ++t) {
    const std::size_t budget = 1 + rng.index(300);
    const std::size_t len = 1 + rng.index(budget);
    std::vector<double> h(len);
    for (double &x : h) x = rng.bernoulli(0.2) ? std::floor(rng.uniform01() * 4) / 4 : rng.uniform01();
    std::vector<double> curve;
    const double expected = testing::naive_auc(h, budget, &curve);
    const AucReport r = auc_top10(h, budget);
    mismatches += r.auc_top10 != expected || r.running_top10 != curve;
  }
  report("auc_exact", mismatches == 0,
         fmt("histories=%d mismatches=%d (exact comparison)", kAucHistories, mismatches));
}

void canonicalization() {
  Rng rng(55);
  int perm_failures = 0;
  for (const MolGraph &g : testing::random_valid_graphs(kCanonGraphs, 56)) {
    const std::string base = canonical_form(g).smiles;
    for (int k = 0; k < kCanonPermutations; ++k) {
      perm_failures += canonical_form(testing::shuffled(g, rng)).smiles != base;
    }
  }
  int small = 0, brute_failures = 0;
  for (const MolGraph &g : testing::small_graph_corpus(400, kBruteForceMaxAtoms, 57)) {
    if (g.atom_count() > kBruteForceMaxAtoms) continue;
    ++small;
    brute_failures += testing::brute_force_canonical(g) != canonical_form(g).smiles;
  }
  for (const MolGraph &g : testing::reference_molecules()) {
    if (g.atom_count() > kBruteForceMaxAtoms) continue;
    ++small;
    brute_failures += testing::brute_force_canonical(g) != canonical_form(g).smiles;
  }
  report("canonicalization", perm_failures == 0 && brute_failures == 0,
         fmt("graphs=%d x %d permutations mismatches=%d; brute force on %d graphs (<=%d atoms) "
             "mismatches=%d",
             kCanonGraphs, kCanonPermutations, perm_failures, small, kBruteForceMaxAtoms,
             brute_failures));
}

void parser_robustness() {
  const std::string alphabet = "CNOSPFBIclnosp[]()=#-+123456789%0H@/\\.:*";
  const std::vector<std::string> &ref = testing::reference_smiles();
  Rng rng(808);
  int crashes = 0, bad = 0, parsed = 0;
  for (int i = 0; i < kFuzzStrings; ++i) {
    std::string s;
    if (i % 2 == 0) {
      const std::size_t len = rng.index(32);
      for (std::size_t j = 0; j < len; ++j) s += alphabet[rng.index(alphabet.size())];
    } else {
      // Point edits of real SMILES reach deeper into the grammar.
      s = ref[rng.index(ref.size())];
      const std::size_t edits = 1 + rng.index(3);
      for (std::size_t e = 0; e < edits && !s.empty(); ++e) {
        const std::size_t at = rng.index(s.size());
        switch (rng.index(3)) {
          case 0: s.erase(at, 1); break;
          case 1: s.insert(s.begin() + static_cast<std::ptrdiff_t>(at), alphabet[rng.index(alphabet.size())]); break;
          default: s[at] = alphabet[rng.index(alphabet.size())]; break;
        }
      }
    }
    try {
      ParseResult r = try_parse_smiles(s);
      if (const MolGraph *g = std::get_if<MolGraph>(&r)) {
        ++parsed;
        bad += !check_valence(*g) || !testing::isomorphic(*g, parse_smiles(write_smiles(*g)));
      } else {
        bad += std::get<ParseFailure>(r).offset > s.size();
      }
    } catch (...) {
      ++crashes;
    }
  }
  int round_trip_failures = 0;
  for (const MolGraph &g : testing::reference_molecules()) {
    round_trip_failures += !testing::isomorphic(g, parse_smiles(write_smiles(g)));
  }
  report("parser_robustness", crashes == 0 && bad == 0 && round_trip_failures == 0,
         fmt("fuzz=%d crashes=%d untyped=%d parsed=%d; reference round trip failures=%d/%zu",
             kFuzzStrings, crashes, bad, parsed, round_trip_failures,
             testing::reference_molecules().size()));
}

void determinism() {
  std::string text[2];
  int codes[2];
  for (int i = 0; i < 2; ++i) {
    const fs::path dir = scratch("determinism_" + std::to_string(i));
    cli::RunManifest m;
    m.mode = cli::Mode::kOptimize;
    m.reference_path = testing::data_path("reference_1k.smi");
    m.oracle = "rediscovery:CC(C)Cc1ccc(cc1)C(C)C(=O)O";
    m.ga.budget = 3000;
    m.ga.rng_seed = 12;
    m.out_dir = dir.string();
    std::ostringstream log;
    codes[i] = cli::cmd_optimize(m, log);
    text[i] = slurp(dir / "history.jsonl");
  }
  const bool ok = codes[0] == cli::kExitOk && codes[1] == cli::kExitOk && !text[0].empty() &&
                  text[0] == text[1];
  report("determinism", ok, fmt("history.jsonl %zu vs %zu bytes, identical=%s", text[0].size(),
                                text[1].size(), text[0] == text[1] ? "yes" : "no"));
}

}  // namespace

int main() {
  const std::vector<std::pair<const char *, std::function<void()>>> criteria = {
      {"generate_validity", operator_validity},
      {"addcarbon_baseline", addcarbon_baseline},
      {"sampler_distribution", sampler_distribution},
      {"rank_only_dependence", rank_only},
      {"rediscovery", [] {
         bool budget_ok = false;
         std::string detail;
         rediscovery(budget_ok, detail);
         budget_ledger_invariants(budget_ok, detail);
         report("budget_exactness", budget_ok, detail);
       }},
      {"auc_exact", auc_correctness},
      {"canonicalization", canonicalization},
      {"parser_robustness", parser_robustness},
      {"determinism", determinism},
  };
  for (const auto &[name, fn] : criteria) {
    try {
      fn();
    } catch (const std::exception &e) {
      report(name, false, std::string("exception: ") + e.what());
    }
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
