//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGA_CANONICAL_H_
#define MOLGA_CANONICAL_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "molga/molgraph.h"

namespace molga {

// Permutation-invariant serialization of a molecule. Two valid graphs have
// equal canonical forms exactly when they are isomorphic.
struct CanonicalForm {
  std::string smiles;

  std::size_t hash() const { return std::hash<std::string>{}(smiles); }

  friend bool operator==(const CanonicalForm &, const CanonicalForm &) = default;
  friend auto operator<=>(const CanonicalForm &, const CanonicalForm &) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm &c) const { return c.hash(); }
};

// Atom invariant used to seed refinement:
// (atomic number, charge, degree, hydrogens, bond order sum, bracket).
std::vector<int> initial_atom_classes(const MolGraph &g);

// Iterates the neighbourhood refinement to a fixed point. Class ids are
// "number of atoms with a strictly smaller signature", so a discrete
// partition is a ranking. The signature of an atom is its current class
// followed by the sorted (neighbour class, bond order) list.
std::vector<int> refine_classes(const MolGraph &g, std::vector<int> classes);

// Splits the cell containing `atom` so that `atom` precedes its cellmates.
void individualize(std::vector<int> &classes, int atom);

// Canonical atom ranking: the leaf of the refine/individualize search tree
// whose serialization is lexicographically smallest. Branching explores one
// child per orbit of the automorphisms discovered so far.
std::vector<int> canonical_ranks(const MolGraph &g);

// Throws InvalidMolecule if the graph fails check_valence.
CanonicalForm canonical_form(const MolGraph &g);

}  // namespace molga

#endif  // MOLGA_CANONICAL_H_
