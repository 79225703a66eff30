#include "support.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "molga/genops.h"
#include "molga/smiles.h"

namespace molga::testing {

std::string data_path(const std::string &name) { return std::string(MOLGA_DATA_DIR) + "/" + name; }

const std::vector<std::string> &reference_smiles() {
  static const std::vector<std::string> smiles = [] {
    std::ifstream in(data_path("reference_1k.smi"));
    if (!in) throw std::runtime_error("missing reference_1k.smi");
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream tokens(line);
      std::string s;
      if (tokens >> s && s[0] != '#') out.push_back(s);
    }
    return out;
  }();
  return smiles;
}

const std::vector<MolGraph> &reference_molecules() {
  static const std::vector<MolGraph> mols = [] {
    std::vector<MolGraph> out;
    for (const std::string &s : reference_smiles()) out.push_back(parse_smiles(s));
    return out;
  }();
  return mols;
}

std::vector<int> random_permutation(int n, Rng &rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  rng.shuffle(p);
  return p;
}

MolGraph shuffled(const MolGraph &g, Rng &rng) {
  const std::vector<int> p = random_permutation(g.atom_count(), rng);
  return g.permuted(p);
}

std::vector<MolGraph> small_graph_corpus(int count, int max_atoms, std::uint64_t seed) {
  const char *seeds[] = {"C", "CO", "C=C", "C1CC1", "CC(=O)N", "C#N", "FC(Cl)Br", "c1ccccc1",
                         "C1=CSC=C1", "[NH4+]", "C[O-]", "OP(=O)(O)O", "B(O)O", "CS(=O)(=O)C"};
  Rng rng(seed);
  std::vector<MolGraph> out;
  std::vector<MolGraph> pool;
  for (const char *s : seeds) pool.push_back(parse_smiles(s));
  while (static_cast<int>(out.size()) < count) {
    MolGraph g = pool[rng.index(pool.size())];
    const int steps = 1 + static_cast<int>(rng.index(8));
    for (int i = 0; i < steps; ++i) {
      MolGraph next = mutate(g, rng).graph;
      if (next.atom_count() <= max_atoms) g = std::move(next);
    }
    if (g.atom_count() <= max_atoms) {
      out.push_back(g);
      pool.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<MolGraph> random_valid_graphs(int count, std::uint64_t seed) {
  Rng rng(seed);
  const std::vector<MolGraph> &ref = reference_molecules();
  std::vector<MolGraph> out;
  while (static_cast<int>(out.size()) < count) {
    MolGraph g = ref[rng.index(ref.size())];
    const int steps = static_cast<int>(rng.index(6));
    for (int i = 0; i < steps; ++i) {
      if (rng.bernoulli(0.3)) {
        g = crossover(g, ref[rng.index(ref.size())], rng).graph;
      } else {
        g = mutate(g, rng).graph;
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

using AtomLabel = std::tuple<int, int, int, int>;

AtomLabel label(const MolGraph &g, int a) {
  return {atomic_number(g.atom(a).element), g.atom(a).formal_charge, hydrogen_count(g, a),
          g.degree(a)};
}

class Matcher {
 public:
  Matcher(const MolGraph &a, const MolGraph &b)
      : a_(a), b_(b), map_(a.atom_count(), -1), used_(b.atom_count(), false) {
    // BFS order on a keeps each new atom adjacent to a mapped one.
    std::vector<bool> seen(a.atom_count(), false);
    for (int s = 0; s < a.atom_count(); ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      order_.push_back(s);
      for (std::size_t i = order_.size() - 1; i < order_.size(); ++i) {
        for (const auto &nb : a.neighbors(order_[i])) {
          if (!seen[nb.atom]) {
            seen[nb.atom] = true;
            order_.push_back(nb.atom);
          }
        }
      }
    }
  }

  bool match(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    const int u = order_[depth];
    for (int v = 0; v < b_.atom_count(); ++v) {
      if (used_[v] || label(a_, u) != label(b_, v) || !consistent(u, v)) continue;
      map_[u] = v;
      used_[v] = true;
      if (match(depth + 1)) return true;
      map_[u] = -1;
      used_[v] = false;
    }
    return false;
  }

 private:
  bool consistent(int u, int v) const {
    for (const auto &nb : a_.neighbors(u)) {
      const int w = map_[nb.atom];
      if (w < 0) continue;
      const std::optional<int> bond = b_.find_bond(v, w);
      if (!bond || b_.bond(*bond).order != a_.bond(nb.bond).order) return false;
    }
    return true;
  }

  const MolGraph &a_;
  const MolGraph &b_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

// Class id = number of atoms with a strictly smaller key.
template <class Key>
std::vector<int> classes_from_keys(const std::vector<Key> &keys) {
  std::vector<int> out(keys.size(), 0);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (std::size_t j = 0; j < keys.size(); ++j) {
      if (keys[j] < keys[i]) ++out[i];
    }
  }
  return out;
}

std::vector<int> naive_refine(const MolGraph &g, std::vector<int> classes) {
  for (;;) {
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> keys;
    for (int a = 0; a < g.atom_count(); ++a) {
      std::vector<std::pair<int, int>> around;
      for (const auto &nb : g.neighbors(a)) {
        around.emplace_back(classes[nb.atom], valence_of(g.bond(nb.bond).order));
      }
      std::sort(around.begin(), around.end());
      keys.emplace_back(classes[a], std::move(around));
    }
    std::vector<int> next = classes_from_keys(keys);
    if (next == classes) return classes;
    classes = std::move(next);
  }
}

}  // namespace

bool isomorphic(const MolGraph &a, const MolGraph &b) {
  if (a.atom_count() != b.atom_count() || a.bond_count() != b.bond_count()) return false;
  std::map<AtomLabel, int> la, lb;
  for (int i = 0; i < a.atom_count(); ++i) ++la[label(a, i)];
  for (int i = 0; i < b.atom_count(); ++i) ++lb[label(b, i)];
  if (la != lb) return false;
  return Matcher(a, b).match();
}

std::string brute_force_canonical(const MolGraph &g0) {
  const MolGraph g = normalize_hydrogens(g0);
  const int n = g.atom_count();
  std::vector<std::tuple<int, int, int, int, int, int>> keys;
  for (int a = 0; a < n; ++a) {
    keys.emplace_back(atomic_number(g.atom(a).element), g.atom(a).formal_charge, g.degree(a),
                      hydrogen_count(g, a), g.bond_order_sum(a), g.atom(a).bracket ? 1 : 0);
  }
  const std::vector<int> initial = classes_from_keys(keys);

  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::string best;
  bool have = false;
  do {
    std::vector<int> classes = naive_refine(g, initial);
    for (;;) {
      std::map<int, int> sizes;
      for (int c : classes) ++sizes[c];
      int target = -1;
      for (const auto &[c, size] : sizes) {
        if (size > 1) {
          target = c;
          break;
        }
      }
      if (target < 0) break;
      int chosen = -1;
      for (int v : pi) {
        if (classes[v] == target) {
          chosen = v;
          break;
        }
      }
      for (int v = 0; v < n; ++v) {
        if (classes[v] == target && v != chosen) classes[v] = target + 1;
      }
      classes = naive_refine(g, classes);
    }
    const std::string s = write_smiles_ranked(g, classes);
    if (!have || s < best) {
      best = s;
      have = true;
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return best;
}

}  // namespace molga::testing
