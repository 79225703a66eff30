#include <gtest/gtest.h>

#include <set>

#include "molga/canonical.h"
#include "molga/error.h"
#include "molga/smiles.h"
#include "support.h"

namespace molga {
namespace {

TEST(Canonical, Examples) {
  EXPECT_EQ(canonical_form(parse_smiles("C")).smiles, "C");
  EXPECT_EQ(canonical_form(parse_smiles("CCO")), canonical_form(parse_smiles("OCC")));
  EXPECT_EQ(canonical_form(parse_smiles("c1ccccc1")), canonical_form(parse_smiles("C1=CC=CC=C1")));
  EXPECT_NE(canonical_form(parse_smiles("CCO")), canonical_form(parse_smiles("COC")));
}

TEST(Canonical, EthanolPermutations) {
  const MolGraph g = parse_smiles("CCO");
  const CanonicalForm c = canonical_form(g);
  std::vector<int> p = {0, 1, 2};
  do {
    EXPECT_EQ(canonical_form(g.permuted(p)), c);
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST(Canonical, RejectsInvalidOrDisconnected) {
  std::vector<Atom> atoms(6);
  std::vector<Bond> bonds;
  for (int i = 1; i < 6; ++i) bonds.push_back({0, i});
  EXPECT_THROW(canonical_form(MolGraph(atoms, bonds)), Error);
  EXPECT_THROW(canonical_form(MolGraph({Atom{}, Atom{}}, {})), Error);
}

TEST(Canonical, RanksArePermutation) {
  for (const MolGraph &g : testing::random_valid_graphs(50, 4)) {
    std::vector<int> r = canonical_ranks(g);
    std::sort(r.begin(), r.end());
    for (int i = 0; i < g.atom_count(); ++i) ASSERT_EQ(r[i], i);
  }
}

TEST(Canonical, RefinementIsEquitable) {
  for (const MolGraph &g : testing::random_valid_graphs(50, 8)) {
    const std::vector<int> c = refine_classes(g, initial_atom_classes(g));
    // Atoms in the same class see the same multiset of neighbour classes.
    for (int a = 0; a < g.atom_count(); ++a) {
      for (int b = 0; b < g.atom_count(); ++b) {
        if (c[a] != c[b]) continue;
        auto around = [&](int x) {
          std::multiset<std::pair<int, int>> s;
          for (const auto &nb : g.neighbors(x)) s.insert({c[nb.atom], valence_of(g.bond(nb.bond).order)});
          return s;
        };
        ASSERT_EQ(around(a), around(b));
      }
    }
  }
}

TEST(Canonical, IndividualizeSplitsCell) {
  std::vector<int> classes = {0, 0, 0, 3};
  individualize(classes, 1);
  EXPECT_EQ(classes, (std::vector<int>{1, 0, 1, 3}));
}

TEST(Canonical, PermutationInvariance) {
  Rng rng(17);
  for (const MolGraph &g : testing::random_valid_graphs(300, 31)) {
    const CanonicalForm c = canonical_form(g);
    for (int k = 0; k < 5; ++k) ASSERT_EQ(canonical_form(testing::shuffled(g, rng)), c);
  }
}

TEST(Canonical, HighlySymmetricGraphs) {
  Rng rng(3);
  for (const char *text : {"C12C3C4C1C5C2C3C45", "C1CC2CCC1CC2", "C1CCCCCCCCCCCCCCCCCCC1",
                           "CC(C)(C)C(C)(C)C", "C1C2CC3CC1CC(C2)C3", "c1cc2ccc3cccc4ccc(c1)c2c34"}) {
    const MolGraph g = parse_smiles(text);
    const CanonicalForm c = canonical_form(g);
    for (int k = 0; k < 20; ++k) ASSERT_EQ(canonical_form(testing::shuffled(g, rng)), c) << text;
    EXPECT_TRUE(testing::isomorphic(g, parse_smiles(c.smiles))) << text;
  }
}

TEST(Canonical, DistinguishesNonIsomorphicGraphs) {
  const std::vector<MolGraph> corpus = testing::small_graph_corpus(400, 7, 9);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = i + 1; j < corpus.size(); ++j) {
      const bool same = canonical_form(corpus[i]) == canonical_form(corpus[j]);
      ASSERT_EQ(same, testing::isomorphic(corpus[i], corpus[j]))
          << write_smiles(corpus[i]) << " vs " << write_smiles(corpus[j]);
    }
  }
}

TEST(Canonical, BruteForceEquivalenceSmallGraphs) {
  for (const MolGraph &g : testing::small_graph_corpus(150, 6, 41)) {
    ASSERT_EQ(canonical_form(g).smiles, testing::brute_force_canonical(g)) << write_smiles(g);
  }
}

}  // namespace
}  // namespace molga
