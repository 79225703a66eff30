//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#include "molga/molgraph.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <utility>

#include "molga/error.h"

namespace molga {

MolGraph::MolGraph(std::vector<Atom> atoms, std::vector<Bond> bonds)
    : atoms_(std::move(atoms)), bonds_(std::move(bonds)) {
  const int n = atom_count();
  if (n < 1) throw Error(ErrorCode::kInvalidMolecule, "molecule has no atoms");
  if (n > kMaxHeavyAtoms) {
    throw Error(ErrorCode::kInvalidMolecule,
                "molecule exceeds " + std::to_string(kMaxHeavyAtoms) +
                    " heavy atoms");
  }
  for (const Atom &a : atoms_) {
    if (a.formal_charge < kMinCharge || a.formal_charge > kMaxCharge) {
      throw Error(ErrorCode::kInvalidMolecule, "formal charge out of range");
    }
    if (a.explicit_h < 0 || (!a.bracket && a.explicit_h != 0)) {
      throw Error(ErrorCode::kInvalidMolecule,
                  "explicit hydrogens are only allowed on bracket atoms");
    }
  }

  std::set<std::pair<int, int>> seen;
  offsets_.assign(n + 1, 0);
  for (const Bond &b : bonds_) {
    if (b.begin < 0 || b.begin >= n || b.end < 0 || b.end >= n) {
      throw Error(ErrorCode::kInvalidMolecule, "bond endpoint out of range");
    }
    if (b.begin == b.end) {
      throw Error(ErrorCode::kInvalidMolecule, "self bond");
    }
    if (!seen.emplace(std::minmax(b.begin, b.end)).second) {
      throw Error(ErrorCode::kInvalidMolecule, "duplicate bond");
    }
    ++offsets_[b.begin + 1];
    ++offsets_[b.end + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  nbrs_.resize(2 * bonds_.size());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (int i = 0; i < bond_count(); ++i) {
    const Bond &b = bonds_[i];
    nbrs_[fill[b.begin]++] = {b.end, i};
    nbrs_[fill[b.end]++] = {b.begin, i};
  }
}

int MolGraph::bond_order_sum(int i) const {
  int sum = 0;
  for (const Neighbor &nb : neighbors(i)) sum += valence_of(bonds_[nb.bond].order);
  return sum;
}

std::optional<int> MolGraph::find_bond(int a, int b) const {
  for (const Neighbor &nb : neighbors(a)) {
    if (nb.atom == b) return nb.bond;
  }
  return std::nullopt;
}

int MolGraph::component_count() const {
  std::vector<int> stack;
  std::vector<bool> seen(atoms_.size(), false);
  int components = 0;
  for (int s = 0; s < atom_count(); ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const Neighbor &nb : neighbors(v)) {
        if (!seen[nb.atom]) {
          seen[nb.atom] = true;
          stack.push_back(nb.atom);
        }
      }
    }
  }
  return components;
}

bool MolGraph::has_aromatic_flags() const {
  return std::any_of(atoms_.begin(), atoms_.end(),
                     [](const Atom &a) { return a.aromatic; }) ||
         std::any_of(bonds_.begin(), bonds_.end(),
                     [](const Bond &b) { return b.aromatic; });
}

MolGraph MolGraph::permuted(std::span<const int> new_index) const {
  std::vector<Atom> atoms(atoms_.size());
  for (std::size_t i = 0; i < atoms_.size(); ++i) atoms[new_index[i]] = atoms_[i];
  std::vector<Bond> bonds;
  bonds.reserve(bonds_.size());
  for (const Bond &b : bonds_) {
    bonds.push_back({new_index[b.begin], new_index[b.end], b.order, b.aromatic});
  }
  return MolGraph(std::move(atoms), std::move(bonds));
}

bool can_hold(const Atom &atom, int bond_sum) {
  const ValenceList allowed = allowed_valences(atom.element, atom.formal_charge);
  if (atom.bracket) {
    const int total = bond_sum + atom.explicit_h;
    return std::find(allowed.begin(), allowed.end(), total) != allowed.end();
  }
  return !allowed.empty() && allowed.back() >= bond_sum;
}

namespace {

std::optional<int> implicit_h_if_valid(const MolGraph &g, int i) {
  const Atom &a = g.atom(i);
  const int sum = g.bond_order_sum(i);
  if (a.bracket) {
    return can_hold(a, sum) ? std::optional<int>(0) : std::nullopt;
  }
  for (int v : allowed_valences(a.element, a.formal_charge)) {
    if (v >= sum) return v - sum;
  }
  return std::nullopt;
}

}  // namespace

int implicit_hydrogens(const MolGraph &g, int atom) {
  if (g.atom(atom).bracket) return 0;
  const std::optional<int> h = implicit_h_if_valid(g, atom);
  if (!h) {
    throw Error(ErrorCode::kValenceViolation,
                "no allowed valence for atom " + std::to_string(atom) + " (" +
                    std::string(symbol(g.atom(atom).element)) + ")");
  }
  return *h;
}

int hydrogen_count(const MolGraph &g, int atom) {
  return implicit_hydrogens(g, atom) + g.atom(atom).explicit_h;
}

bool atom_valence_ok(const MolGraph &g, int atom) {
  return implicit_h_if_valid(g, atom).has_value();
}

bool check_valence(const MolGraph &g) {
  if (g.has_aromatic_flags()) return false;
  for (int i = 0; i < g.atom_count(); ++i) {
    if (!atom_valence_ok(g, i)) return false;
  }
  return true;
}

MolGraph normalize_hydrogens(const MolGraph &g) {
  std::vector<Atom> atoms(g.atoms().begin(), g.atoms().end());
  bool changed = false;
  for (int i = 0; i < g.atom_count(); ++i) {
    Atom &a = atoms[i];
    if (!a.bracket || a.aromatic) continue;
    const int sum = g.bond_order_sum(i);
    for (int v : allowed_valences(a.element, a.formal_charge)) {
      if (v >= sum) {
        if (v - sum == a.explicit_h) {
          a.bracket = false;
          a.explicit_h = 0;
          changed = true;
        }
        break;
      }
    }
  }
  if (!changed) return g;
  return MolGraph(std::move(atoms),
                  std::vector<Bond>(g.bonds().begin(), g.bonds().end()));
}

std::vector<bool> ring_bond_flags(const MolGraph &g) {
  // Tarjan bridge finding, iterative.
  const int n = g.atom_count();
  std::vector<bool> in_ring(g.bond_count(), true);
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  struct Frame {
    int atom;
    int parent_bond;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (int s = 0; s < n; ++s) {
    if (disc[s] >= 0) continue;
    disc[s] = low[s] = timer++;
    stack.push_back({s, -1, 0});
    while (!stack.empty()) {
      Frame &f = stack.back();
      const auto nbrs = g.neighbors(f.atom);
      if (f.next < nbrs.size()) {
        const MolGraph::Neighbor nb = nbrs[f.next++];
        if (nb.bond == f.parent_bond) continue;
        if (disc[nb.atom] >= 0) {
          low[f.atom] = std::min(low[f.atom], disc[nb.atom]);
        } else {
          disc[nb.atom] = low[nb.atom] = timer++;
          stack.push_back({nb.atom, nb.bond, 0});
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame &parent = stack.back();
          low[parent.atom] = std::min(low[parent.atom], low[done.atom]);
          if (low[done.atom] > disc[parent.atom]) in_ring[done.parent_bond] = false;
        }
      }
    }
  }
  return in_ring;
}

int ring_count(const MolGraph &g) {
  return g.bond_count() - g.atom_count() + g.component_count();
}

Formula molecular_formula(const MolGraph &g) {
  if (!check_valence(g)) {
    throw Error(ErrorCode::kInvalidMolecule, "formula of an invalid molecule");
  }
  Formula f;
  int hydrogens = 0;
  for (int i = 0; i < g.atom_count(); ++i) {
    ++f[std::string(symbol(g.atom(i).element))];
    hydrogens += hydrogen_count(g, i);
  }
  if (hydrogens > 0) f["H"] = hydrogens;
  return f;
}

Formula parse_formula(std::string_view text) {
  Formula f;
  std::size_t i = 0;
  auto fail = [&](const std::string &why) {
    throw Error(ErrorCode::kConfigError,
                "bad formula '" + std::string(text) + "': " + why);
  };
  if (text.empty()) fail("empty");
  while (i < text.size()) {
    if (!std::isupper(static_cast<unsigned char>(text[i]))) {
      fail("expected element symbol");
    }
    std::size_t j = i + 1;
    while (j < text.size() && std::islower(static_cast<unsigned char>(text[j]))) ++j;
    const std::string sym(text.substr(i, j - i));
    if (sym != "H" && !element_from_symbol(sym)) fail("unknown element " + sym);
    std::size_t k = j;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
    const int count = k == j ? 1 : std::stoi(std::string(text.substr(j, k - j)));
    if (count > 0) f[sym] += count;
    i = k;
  }
  return f;
}

std::string format_formula(const Formula &f) {
  std::string out;
  auto emit = [&](const std::string &sym, int count) {
    out += sym;
    if (count != 1) out += std::to_string(count);
  };
  if (auto it = f.find("C"); it != f.end()) emit("C", it->second);
  if (auto it = f.find("H"); it != f.end()) emit("H", it->second);
  for (const auto &[sym, count] : f) {
    if (sym != "C" && sym != "H") emit(sym, count);
  }
  return out;
}

}  // namespace molga
