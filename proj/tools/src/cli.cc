//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#include "molga_cli/cli.h"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "molga/canonical.h"
#include "molga/genops.h"
#include "molga/smiles.h"

namespace molga::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void config_error(const std::string &why) {
  throw Error(ErrorCode::kConfigError, why);
}

template <class T>
T get(const json &j, std::string_view key) {
  try {
    return j.get<T>();
  } catch (const json::exception &) {
    config_error("config key '" + std::string(key) + "' has the wrong type");
  }
}

void check_keys(const json &obj, std::string_view where,
                std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) config_error(std::string(where) + " must be an object");
  for (const auto &[key, value] : obj.items()) {
    bool known = false;
    for (std::string_view a : allowed) known = known || a == key;
    if (!known) config_error("unknown config key '" + std::string(where) + key + "'");
  }
}

StartSource start_source_from_string(std::string_view s) {
  if (s == "reference") return StartSource::kReference;
  if (s == "target_variants") return StartSource::kTargetVariants;
  config_error("unknown start source '" + std::string(s) + "'");
}

std::string_view to_string(StartSource s) {
  return s == StartSource::kReference ? "reference" : "target_variants";
}

void apply_genops(const json &j, GenopsConfig &g) {
  check_keys(j, "genops.", {"edit_weights", "substitution_elements", "crossover_probability",
                            "mutate_after_crossover", "size_biased_crossover", "max_attempts"});
  if (j.contains("edit_weights")) {
    const json &w = j["edit_weights"];
    if (!w.is_object()) config_error("genops.edit_weights must be an object");
    for (const auto &[key, value] : w.items()) {
      const std::optional<EditKind> kind = edit_kind_from_string(key);
      if (!kind) config_error("unknown edit kind '" + key + "'");
      g.edit_weights[static_cast<std::size_t>(*kind)] = get<double>(value, key);
    }
  }
  if (j.contains("substitution_elements")) {
    g.substitution_elements.clear();
    for (const json &e : j["substitution_elements"]) {
      const std::string sym = get<std::string>(e, "substitution_elements");
      const std::optional<Element> el = element_from_symbol(sym);
      if (!el) config_error("unknown element '" + sym + "'");
      g.substitution_elements.push_back(*el);
    }
  }
  if (j.contains("crossover_probability"))
    g.crossover_probability = get<double>(j["crossover_probability"], "crossover_probability");
  if (j.contains("mutate_after_crossover"))
    g.mutate_after_crossover = get<double>(j["mutate_after_crossover"], "mutate_after_crossover");
  if (j.contains("size_biased_crossover"))
    g.size_biased_crossover = get<bool>(j["size_biased_crossover"], "size_biased_crossover");
  if (j.contains("max_attempts")) g.max_attempts = get<int>(j["max_attempts"], "max_attempts");
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::ofstream open_output(const fs::path &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write " + path.string());
  return out;
}

void close_output(std::ofstream &out, const fs::path &path) {
  out.close();
  if (!out) throw std::ios_base::failure("failed writing " + path.string());
}

void write_manifest(const RunManifest &m, const fs::path &dir) {
  const fs::path path = dir / "manifest.json";
  std::ofstream out = open_output(path);
  out << to_json(m).dump(2) << '\n';
  close_output(out, path);
}

void write_rejections(const ReferenceSet &ref, const fs::path &dir) {
  const fs::path path = dir / "rejections.tsv";
  std::ofstream out = open_output(path);
  out << "line\terror\toffset\tsmiles\tmessage\n";
  for (const Rejection &r : ref.rejections) {
    out << r.line << '\t' << molga::to_string(r.code) << '\t' << r.offset << '\t' << r.smiles
        << '\t' << r.message << '\n';
  }
  close_output(out, path);
}

ReferenceSet load_reference(const RunManifest &m, std::ostream &log, const fs::path &dir) {
  ReferenceSet ref = ingest_reference(*m.reference_path);
  write_rejections(ref, dir);
  log << "reference: " << ref.molecules.size() << " accepted, " << ref.rejections.size()
      << " rejected\n";
  if (ref.molecules.empty()) {
    throw Error(ErrorCode::kEmptyReference, "no usable molecule in " + *m.reference_path);
  }
  return ref;
}

template <class Fn>
int guarded(std::ostream &log, Fn &&fn) {
  try {
    return fn();
  } catch (const Error &e) {
    log << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::kOracleFailure:
        return kExitOracleError;
      case ErrorCode::kEmptyReference:
        return kExitReferenceError;
      default:
        return kExitConfigError;
    }
  } catch (const std::ios_base::failure &e) {
    log << "error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const fs::filesystem_error &e) {
    log << "error: " << e.what() << '\n';
    return kExitIoError;
  }
}

}  // namespace

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kOptimize:
      return "optimize";
    case Mode::kGenerate:
      return "generate";
    case Mode::kAddCarbonBaseline:
      return "addcarbon-baseline";
  }
  return "?";
}

Mode mode_from_string(std::string_view name) {
  if (name == "optimize") return Mode::kOptimize;
  if (name == "generate") return Mode::kGenerate;
  if (name == "addcarbon-baseline") return Mode::kAddCarbonBaseline;
  config_error("unknown mode '" + std::string(name) + "'");
}

void apply_config(const json &c, RunManifest &m) {
  check_keys(c, "", {"mode", "reference", "oracle", "out", "n", "seed", "population_size",
                     "offspring_size", "budget", "sampler", "genops", "start",
                     "count_initial_evaluations", "max_stall_steps"});
  if (c.contains("mode")) m.mode = mode_from_string(get<std::string>(c["mode"], "mode"));
  if (c.contains("reference")) {
    if (c["reference"].is_null()) {
      m.reference_path.reset();
    } else {
      m.reference_path = get<std::string>(c["reference"], "reference");
    }
  }
  if (c.contains("oracle")) {
    if (c["oracle"].is_null()) {
      m.oracle.reset();
    } else {
      m.oracle = c["oracle"];
    }
  }
  if (c.contains("out")) m.out_dir = get<std::string>(c["out"], "out");
  if (c.contains("n")) m.n = get<std::size_t>(c["n"], "n");
  GAConfig &ga = m.ga;
  if (c.contains("seed")) ga.rng_seed = get<std::uint64_t>(c["seed"], "seed");
  if (c.contains("population_size"))
    ga.population_size = get<std::size_t>(c["population_size"], "population_size");
  if (c.contains("offspring_size"))
    ga.offspring_size = get<std::size_t>(c["offspring_size"], "offspring_size");
  if (c.contains("budget")) ga.budget = get<std::size_t>(c["budget"], "budget");
  if (c.contains("count_initial_evaluations"))
    ga.count_initial_evaluations =
        get<bool>(c["count_initial_evaluations"], "count_initial_evaluations");
  if (c.contains("max_stall_steps"))
    ga.max_stall_steps = get<std::size_t>(c["max_stall_steps"], "max_stall_steps");
  if (c.contains("sampler")) {
    const json &s = c["sampler"];
    check_keys(s, "sampler.", {"mode", "min_exponent"});
    if (s.contains("mode")) {
      try {
        ga.sampler.mode = sampler_mode_from_string(get<std::string>(s["mode"], "sampler.mode"));
      } catch (const Error &e) {
        config_error(e.what());
      }
    }
    if (s.contains("min_exponent"))
      ga.sampler.min_exponent = get<double>(s["min_exponent"], "sampler.min_exponent");
  }
  if (c.contains("genops")) apply_genops(c["genops"], ga.genops);
  if (c.contains("start")) {
    const json &s = c["start"];
    check_keys(s, "start.", {"source", "seed", "variant_edits"});
    if (s.contains("source"))
      ga.start_source = start_source_from_string(get<std::string>(s["source"], "start.source"));
    if (s.contains("seed")) {
      if (s["seed"].is_null()) {
        ga.start_seed_smiles.reset();
      } else {
        ga.start_seed_smiles = get<std::string>(s["seed"], "start.seed");
      }
    }
    if (s.contains("variant_edits"))
      ga.start_variant_edits = get<int>(s["variant_edits"], "start.variant_edits");
  }
}

void apply_config_file(const fs::path &path, RunManifest &m) {
  std::ifstream in(path);
  if (!in) config_error("cannot read config " + path.string());
  json c;
  try {
    c = json::parse(in);
  } catch (const json::parse_error &e) {
    config_error("config " + path.string() + ": " + e.what());
  }
  apply_config(c, m);
  m.config_path = path.string();
}

ojson to_json(const RunManifest &m) {
  const GAConfig &ga = m.ga;
  ojson j;
  j["mode"] = to_string(m.mode);
  j["reference"] = m.reference_path ? ojson(*m.reference_path) : ojson(nullptr);
  j["oracle"] = m.oracle ? ojson(*m.oracle) : ojson(nullptr);
  j["out"] = m.out_dir;
  j["n"] = m.n;
  j["seed"] = ga.rng_seed;
  j["population_size"] = ga.population_size;
  j["offspring_size"] = ga.offspring_size;
  j["budget"] = ga.budget;
  j["count_initial_evaluations"] = ga.count_initial_evaluations;
  j["max_stall_steps"] = ga.max_stall_steps;
  j["sampler"] = {{"mode", to_string(ga.sampler.mode)},
                  {"min_exponent", ga.sampler.min_exponent}};
  ojson weights;
  for (EditKind k : kAllEditKinds) {
    weights[std::string(to_string(k))] = ga.genops.edit_weights[static_cast<std::size_t>(k)];
  }
  ojson elements = ojson::array();
  for (Element e : ga.genops.substitution_elements) elements.push_back(symbol(e));
  ojson genops;
  genops["edit_weights"] = std::move(weights);
  genops["substitution_elements"] = std::move(elements);
  genops["crossover_probability"] = ga.genops.crossover_probability;
  genops["mutate_after_crossover"] = ga.genops.mutate_after_crossover;
  genops["size_biased_crossover"] = ga.genops.size_biased_crossover;
  genops["max_attempts"] = ga.genops.max_attempts;
  j["genops"] = std::move(genops);
  ojson start;
  start["source"] = to_string(ga.start_source);
  start["seed"] = ga.start_seed_smiles ? ojson(*ga.start_seed_smiles) : ojson(nullptr);
  start["variant_edits"] = ga.start_variant_edits;
  j["start"] = std::move(start);
  return j;
}

void validate(const RunManifest &m) {
  if (m.mode == Mode::kOptimize) {
    if (!m.oracle) config_error("optimize mode requires an oracle");
    if (m.ga.start_source == StartSource::kReference && !m.reference_path) {
      config_error("optimize mode with start source 'reference' requires a reference file");
    }
  } else if (!m.reference_path) {
    config_error(std::string(to_string(m.mode)) + " mode requires a reference file");
  }
  if (m.out_dir.empty()) config_error("output directory is empty");
  m.ga.validate();
}

Oracle build_oracle(const json &spec) {
  if (spec.is_string()) return make_oracle(spec.get<std::string>());
  if (!spec.is_object() || !spec.contains("kind")) {
    config_error("oracle must be a string or an object with a 'kind'");
  }
  const std::string kind = get<std::string>(spec["kind"], "oracle.kind");
  if (kind == "isomer") {
    check_keys(spec, "oracle.", {"kind", "formula", "temperature"});
    const Formula f = parse_formula(get<std::string>(spec.value("formula", json()), "formula"));
    return isomer_oracle(f, get<double>(spec.value("temperature", json(2.0)), "temperature"));
  }
  if (kind == "external") {
    check_keys(spec, "oracle.", {"kind", "command", "timeout_ms"});
    const auto ms = get<std::int64_t>(spec.value("timeout_ms", json(30000)), "timeout_ms");
    if (ms <= 0) config_error("oracle.timeout_ms must be positive");
    return external_oracle(get<std::string>(spec.value("command", json()), "command"),
                           std::chrono::milliseconds(ms));
  }
  if (kind == "mpo") {
    check_keys(spec, "oracle.", {"kind", "name", "components"});
    std::vector<std::pair<Oracle, double>> parts;
    for (const json &c : spec.value("components", json::array())) {
      check_keys(c, "oracle.components.", {"oracle", "weight"});
      if (!c.contains("oracle")) config_error("mpo component without an oracle");
      parts.emplace_back(build_oracle(c["oracle"]), get<double>(c.value("weight", json(1.0)),
                                                                 "weight"));
    }
    return geometric_mpo(std::move(parts), spec.value("name", std::string("mpo")));
  }
  check_keys(spec, "oracle.", {"kind", "argument"});
  return make_oracle(kind + ":" + get<std::string>(spec.value("argument", json()), "argument"));
}

ReferenceSet ingest_reference(std::istream &in) {
  ReferenceSet out;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    std::istringstream tokens(line);
    std::string smiles;
    if (!(tokens >> smiles) || smiles.front() == '#') continue;
    ParseResult r = try_parse_smiles(smiles);
    if (auto *g = std::get_if<MolGraph>(&r)) {
      out.molecules.push_back(std::move(*g));
      out.smiles.push_back(std::move(smiles));
    } else {
      const ParseFailure &f = std::get<ParseFailure>(r);
      out.rejections.push_back({number, f.code, f.offset, std::move(smiles), f.message});
    }
  }
  return out;
}

ReferenceSet ingest_reference(const fs::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kEmptyReference, "cannot read reference " + path.string());
  return ingest_reference(in);
}

GenerateOutput generate(const ReferenceSet &reference, const RunManifest &m) {
  if (reference.molecules.empty()) {
    throw Error(ErrorCode::kEmptyReference, "empty reference set");
  }
  CanonicalSet ref_forms;
  std::vector<ScoredMol> members;
  for (const MolGraph &g : reference.molecules) {
    CanonicalForm c = canonical_form(g);
    if (ref_forms.insert(c).second) members.push_back({std::move(c), g, 0.0, std::nullopt});
  }

  std::vector<MolGraph> molecules;
  molecules.reserve(m.n);
  if (m.mode == Mode::kAddCarbonBaseline) {
    std::vector<std::size_t> sites;
    for (std::size_t i = 0; i < reference.molecules.size(); ++i) {
      const MolGraph &g = reference.molecules[i];
      for (int a = 0; a < static_cast<int>(g.atom_count()); ++a) {
        if (hydrogen_count(g, a) > 0) {
          sites.push_back(i);
          break;
        }
      }
    }
    if (sites.empty() && m.n > 0) {
      throw Error(ErrorCode::kNoFreeValence, "no reference molecule carries a hydrogen");
    }
    for (std::size_t i = 0; i < m.n; ++i) {
      Rng lane = Rng::derive(m.ga.rng_seed, 0, i + 1);
      const MolGraph &parent = reference.molecules[sites[lane.index(sites.size())]];
      molecules.push_back(add_carbon(parent, lane));
    }
  } else {
    // The reference is unscored: every member ties for the top rank, so each
    // quantile pool spans the whole population.
    GAConfig ga = m.ga;
    ga.sampler.min_exponent = 0.0;
    const Population population = Population::from_members(members, members.size());
    for (Child &c : breed(population, m.n, ga, 0)) molecules.push_back(std::move(c.graph));
  }

  GenerateOutput out;
  out.canonical.reserve(molecules.size());
  for (const MolGraph &g : molecules) {
    if (check_valence(g) && g.is_connected()) {
      out.canonical.push_back(canonical_form(g));
    } else {
      out.canonical.push_back(std::nullopt);
    }
  }
  out.report = generation_metrics(out.canonical, ref_forms);
  return out;
}

int cmd_optimize(const RunManifest &m, std::ostream &log) {
  return guarded(log, [&] {
    validate(m);
    const fs::path dir(m.out_dir);
    fs::create_directories(dir);
    write_manifest(m, dir);
    ReferenceSet ref;
    if (m.reference_path) ref = load_reference(m, log, dir);
    const Oracle oracle = build_oracle(*m.oracle);
    GAConfig ga = m.ga;
    ga.threads = threads_from_env();
    const RunResult result = run(ga, oracle, ref.molecules);

    const fs::path history = dir / "history.jsonl";
    std::ofstream out = open_output(history);
    write_jsonl(result, out);
    close_output(out, history);

    const AucReport auc = run_auc(result);
    const ScoredMol &best = result.final_population.at_rank(0);
    const fs::path csv = dir / "summary.csv";
    std::ofstream summary = open_output(csv);
    summary << "oracle,seed,budget,evaluations,steps,stalled,auc_top10,top10_mean,best_score,"
               "best\n"
            << csv_field(result.oracle_name) << ',' << result.seed << ',' << result.budget << ','
            << result.history.size() << ',' << result.steps << ','
            << (result.stalled ? "true" : "false") << ',' << format_double(auc.auc_top10) << ','
            << format_double(auc.final_top10_mean) << ',' << format_double(best.score) << ','
            << csv_field(best.canonical.smiles) << '\n';
    close_output(summary, csv);

    log << auc_table_header() << '\n' << auc_table_row(result.oracle_name, auc) << '\n';
    log << "evaluations: " << result.history.size() << '/' << result.budget
        << (result.stalled ? " (stalled)" : "") << '\n';
    log << "best: " << best.canonical.smiles << " " << format_double(best.score) << '\n';
    return static_cast<int>(kExitOk);
  });
}

int cmd_generate(const RunManifest &m, std::ostream &log) {
  return guarded(log, [&] {
    validate(m);
    const fs::path dir(m.out_dir);
    fs::create_directories(dir);
    write_manifest(m, dir);
    const ReferenceSet ref = load_reference(m, log, dir);
    RunManifest resolved = m;
    resolved.ga.threads = threads_from_env();
    const GenerateOutput gen = generate(ref, resolved);

    const fs::path smi = dir / "generated.smi";
    std::ofstream out = open_output(smi);
    for (const std::optional<CanonicalForm> &c : gen.canonical) {
      out << (c ? c->smiles : std::string("<invalid>")) << '\n';
    }
    close_output(out, smi);

    const fs::path report = dir / "report.json";
    std::ofstream rep = open_output(report);
    rep << to_json(gen.report) << '\n';
    close_output(rep, report);

    const GenerationReport &r = gen.report;
    const fs::path csv = dir / "summary.csv";
    std::ofstream summary = open_output(csv);
    summary << "method,n_generated,n_valid,n_unique,n_novel,validity,uniqueness,novelty\n"
            << to_string(m.mode) << ',' << r.n_generated << ',' << r.n_valid << ','
            << r.n_unique << ',' << r.n_novel << ',' << format_double(r.validity) << ','
            << format_double(r.uniqueness) << ',' << format_double(r.novelty) << '\n';
    close_output(summary, csv);

    log << generation_table_header() << '\n'
        << generation_table_row(to_string(m.mode), r) << '\n';
    return static_cast<int>(kExitOk);
  });
}

int run_manifest(const RunManifest &m, std::ostream &log) {
  return m.mode == Mode::kOptimize ? cmd_optimize(m, log) : cmd_generate(m, log);
}

unsigned threads_from_env() {
  const char *env = std::getenv("MOLGA_THREADS");
  if (!env || !*env) return 1;
  unsigned value = 0;
  const std::string_view s(env);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value == 0) {
    config_error("MOLGA_THREADS must be a positive integer");
  }
  return value;
}

}  // namespace molga::cli
