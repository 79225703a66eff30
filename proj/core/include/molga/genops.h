//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGA_GENOPS_H_
#define MOLGA_GENOPS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "molga/canonical.h"
#include "molga/element.h"
#include "molga/molgraph.h"
#include "molga/random.h"

namespace molga {

enum class EditKind : std::uint8_t {
  kInsertAtom,        // append a terminal carbon by a single bond
  kDeleteAtom,        // remove a degree-1 atom
  kSubstituteElement, // change element, charge reset to 0
  kChangeBondOrder,   // +-1 within single..triple
  kAddRingBond,       // new single bond closing a ring of size 3..7
  kDeleteRingBond,    // remove a bond that lies on a ring
};

inline constexpr std::size_t kEditKindCount = 6;

inline constexpr std::array<EditKind, kEditKindCount> kAllEditKinds = {
    EditKind::kInsertAtom,      EditKind::kDeleteAtom,
    EditKind::kSubstituteElement, EditKind::kChangeBondOrder,
    EditKind::kAddRingBond,     EditKind::kDeleteRingBond};

std::string_view to_string(EditKind kind);
std::optional<EditKind> edit_kind_from_string(std::string_view name);

// Default edit weights, indexed by EditKind.
inline constexpr std::array<double, kEditKindCount> kDefaultEditWeights = {
    0.25, 0.15, 0.25, 0.20, 0.075, 0.075};

struct GenopsConfig {
  std::array<double, kEditKindCount> edit_weights = kDefaultEditWeights;
  // Elements an atom may be substituted with.
  std::vector<Element> substitution_elements = {
      Element::kC, Element::kN, Element::kO, Element::kS,
      Element::kF, Element::kCl, Element::kBr};
  // Offspring mix: crossover of two parents with this probability, then
  // mutation of the child with mutate_after_crossover; otherwise one parent
  // is mutated.
  double crossover_probability = 0.5;
  double mutate_after_crossover = 0.5;
  // Crossover keeps each fragment with probability proportional to its size
  // instead of uniformly.
  bool size_biased_crossover = false;
  int max_attempts = 20;
};

struct GenopsStats {
  std::array<std::uint64_t, kEditKindCount> applied{};
  std::uint64_t identity_mutations = 0;
  std::uint64_t crossovers = 0;
  std::uint64_t crossover_fallbacks = 0;

  GenopsStats &operator+=(const GenopsStats &other);
};

// One concrete edit. For kSubstituteElement `value` is the new element, for
// kChangeBondOrder it is the order delta (+1 or -1); `a`/`b` are atoms, or
// `a` is a bond index for the bond edits.
struct Edit {
  EditKind kind;
  int a = -1;
  int b = -1;
  int value = 0;

  friend bool operator==(const Edit &, const Edit &) = default;
};

// Every edit of `kind` that keeps the molecule valid and connected.
std::vector<Edit> feasible_edits(const MolGraph &g, EditKind kind,
                                 const GenopsConfig &config = {});

MolGraph apply_edit(const MolGraph &g, const Edit &edit);

struct MutationResult {
  MolGraph graph;
  std::optional<EditKind> kind;  // empty when every attempt was infeasible
};

// Samples an edit kind by weight and a feasible edit of that kind uniformly;
// a kind without feasible edits costs one attempt. After max_attempts the
// parent is returned unchanged.
MutationResult mutate(const MolGraph &parent, Rng &rng,
                      const GenopsConfig &config = {},
                      GenopsStats *stats = nullptr);

struct CrossoverResult {
  MolGraph graph;
  bool fell_back = false;
  std::optional<EditKind> fallback_kind;
};

// Cuts a non-ring single bond in each parent and joins one fragment of each
// at the cut atoms with a single bond. Falls back to mutate(parent_a) when
// either parent has no such bond or every attempt exceeds the size cap.
CrossoverResult crossover(const MolGraph &parent_a, const MolGraph &parent_b,
                          Rng &rng, const GenopsConfig &config = {},
                          GenopsStats *stats = nullptr);

// Attaches one carbon by a single bond to an atom chosen uniformly among
// atoms carrying at least one hydrogen. Throws NoFreeValence.
MolGraph add_carbon(const MolGraph &reference, Rng &rng);

struct Provenance {
  std::string op;
  std::vector<CanonicalForm> parents;
};

struct Child {
  MolGraph graph;
  Provenance provenance;
};

// Parents per offspring (1 = mutation, 2 = crossover), drawn from the mix.
std::vector<int> plan_parent_counts(std::size_t offspring, Rng &rng,
                                    const GenopsConfig &config = {});

// Produces one child from one or two parents. `parent_forms` are recorded as
// provenance.
Child make_child(std::span<const MolGraph *const> parents,
                 std::span<const CanonicalForm> parent_forms, Rng &rng,
                 const GenopsConfig &config = {}, GenopsStats *stats = nullptr);

struct OffspringBatch {
  std::vector<MolGraph> molecules;
  std::vector<Provenance> provenance;
};

}  // namespace molga

#endif  // MOLGA_GENOPS_H_
