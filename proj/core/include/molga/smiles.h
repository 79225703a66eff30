//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGA_SMILES_H_
#define MOLGA_SMILES_H_

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "molga/error.h"
#include "molga/molgraph.h"

namespace molga {

// Parses the supported SMILES subset: organic and bracket atoms of B C N O P
// S F Cl Br I (aromatic b c n o p s), charges and hydrogen counts in
// brackets, bonds - = # :, branches, ring closures 0-9 and %nn.
//
// Aromatic input is kekulized; the returned graph carries explicit bond
// orders only and passes check_valence. Throws SmilesError with one of
// SyntaxError, UnsupportedFeature (stereo, isotopes, '.', wildcards, atom
// classes, other elements), ValenceViolation or KekulizationFailure.
MolGraph parse_smiles(std::string_view text);

struct ParseFailure {
  ErrorCode code;
  std::size_t offset;
  std::string message;
};

using ParseResult = std::variant<MolGraph, ParseFailure>;

// Non-throwing variant of parse_smiles.
ParseResult try_parse_smiles(std::string_view text);

// Assigns double bonds to aromatic bonds so every aromatic atom reaches an
// allowed valence; a perfect matching over the aromatic atoms that still
// need one extra bond. Graphs without aromatic flags are returned unchanged.
// Throws KekulizationFailure.
MolGraph kekulize(const MolGraph &g);

// Depth-first serialization rooted at the rank-0 atom, visiting neighbours
// in rank order. Emits Kekule (uppercase) SMILES. `ranks` must be a
// permutation of 0..n-1.
std::string write_smiles_ranked(const MolGraph &g, std::span<const int> ranks);

// Canonical SMILES. Throws InvalidMolecule for graphs failing check_valence.
std::string write_smiles(const MolGraph &g);

}  // namespace molga

#endif  // MOLGA_SMILES_H_
