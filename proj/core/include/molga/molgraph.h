//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGA_MOLGRAPH_H_
#define MOLGA_MOLGRAPH_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "molga/element.h"

namespace molga {

inline constexpr int kMaxHeavyAtoms = 120;

enum class BondOrder : std::uint8_t { kSingle = 1, kDouble = 2, kTriple = 3 };

constexpr int valence_of(BondOrder order) { return static_cast<int>(order); }

struct Atom {
  Element element = Element::kC;
  int formal_charge = 0;
  // Hydrogen count written inside brackets. Only meaningful when `bracket`
  // is set; bracket atoms never receive implicit hydrogens.
  int explicit_h = 0;
  bool bracket = false;
  // Lowercase SMILES atom. Cleared by kekulize().
  bool aromatic = false;

  friend bool operator==(const Atom &, const Atom &) = default;
};

struct Bond {
  int begin = 0;
  int end = 0;
  BondOrder order = BondOrder::kSingle;
  // Bond between two aromatic atoms whose order is still unresolved.
  bool aromatic = false;

  int other(int atom) const { return atom == begin ? end : begin; }

  friend bool operator==(const Bond &, const Bond &) = default;
};

// Undirected attributed molecular graph. Immutable once constructed; the
// constructor enforces the structural invariants (indices, duplicate bonds,
// charge range, size cap) but not valence, which is a separate verdict.
class MolGraph {
 public:
  struct Neighbor {
    int atom;
    int bond;
  };

  MolGraph(std::vector<Atom> atoms, std::vector<Bond> bonds);

  int atom_count() const { return static_cast<int>(atoms_.size()); }
  int bond_count() const { return static_cast<int>(bonds_.size()); }

  const Atom &atom(int i) const { return atoms_[i]; }
  const Bond &bond(int b) const { return bonds_[b]; }
  std::span<const Atom> atoms() const { return atoms_; }
  std::span<const Bond> bonds() const { return bonds_; }

  std::span<const Neighbor> neighbors(int i) const {
    return {nbrs_.data() + offsets_[i],
            static_cast<std::size_t>(offsets_[i + 1] - offsets_[i])};
  }
  int degree(int i) const { return offsets_[i + 1] - offsets_[i]; }
  int bond_order_sum(int i) const;
  std::optional<int> find_bond(int a, int b) const;

  int component_count() const;
  bool is_connected() const { return component_count() == 1; }
  bool has_aromatic_flags() const;

  // Relabels atoms: atom i of this graph becomes atom new_index[i].
  MolGraph permuted(std::span<const int> new_index) const;

  friend bool operator==(const MolGraph &a, const MolGraph &b) {
    return a.atoms_ == b.atoms_ && a.bonds_ == b.bonds_;
  }

 private:
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<int> offsets_;
  std::vector<Neighbor> nbrs_;
};

// True when `bond_sum` bonding electrons (sum of bond orders) can be placed
// on `atom` under the valence table, counting its fixed bracket hydrogens.
bool can_hold(const Atom &atom, int bond_sum);

// Implicit hydrogens under the smallest allowed valence that fits; 0 for
// bracket atoms. Throws ValenceViolation if nothing fits a non-bracket atom.
int implicit_hydrogens(const MolGraph &g, int atom);

// Implicit plus explicit hydrogens.
int hydrogen_count(const MolGraph &g, int atom);

bool atom_valence_ok(const MolGraph &g, int atom);

// Every atom satisfies the valence table and no aromatic flag is left
// unresolved.
bool check_valence(const MolGraph &g);

// Drops bracket status from atoms whose stated hydrogen count equals the
// implicit count they would get anyway, so that [nH] in a kekulized pyrrole
// and a plain N are the same atom.
MolGraph normalize_hydrogens(const MolGraph &g);

// Bonds whose removal does not disconnect their component.
std::vector<bool> ring_bond_flags(const MolGraph &g);

// Cyclomatic number: bonds - atoms + components.
int ring_count(const MolGraph &g);

// Element symbol (and "H") to count.
using Formula = std::map<std::string, int, std::less<>>;

// Throws InvalidMolecule when the graph fails check_valence.
Formula molecular_formula(const MolGraph &g);

// "C7H8N2O2" style; throws ConfigError on malformed input.
Formula parse_formula(std::string_view text);

// Hill order: C, H, then the rest alphabetically.
std::string format_formula(const Formula &f);

}  // namespace molga

#endif  // MOLGA_MOLGRAPH_H_
