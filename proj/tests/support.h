// Shared fixtures and independent oracles for the test suites.

#ifndef MOLGA_TESTS_SUPPORT_H_
#define MOLGA_TESTS_SUPPORT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "molga/molgraph.h"
#include "molga/random.h"

namespace molga::testing {

std::string data_path(const std::string &name);

// The bundled 1,000-molecule reference, parsed.
const std::vector<MolGraph> &reference_molecules();
const std::vector<std::string> &reference_smiles();

std::vector<int> random_permutation(int n, Rng &rng);
MolGraph shuffled(const MolGraph &g, Rng &rng);

// Valid connected graphs reached by random edit walks from small seeds,
// each with at most max_atoms heavy atoms.
std::vector<MolGraph> small_graph_corpus(int count, int max_atoms, std::uint64_t seed);

// Valid graphs from random edits of reference molecules.
std::vector<MolGraph> random_valid_graphs(int count, std::uint64_t seed);

// Backtracking isomorphism test on element, charge, hydrogen count and bond
// order. Independent of the canonical labeling code.
bool isomorphic(const MolGraph &a, const MolGraph &b);

// Brute-force canonical string: every n! tie-break order drives a naive
// refine-and-individualize descent to a discrete labeling; the smallest
// serialization wins. Only for small graphs.
std::string brute_force_canonical(const MolGraph &g);

}  // namespace molga::testing

#endif  // MOLGA_TESTS_SUPPORT_H_
