//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#include "molga/genops.h"

#include <algorithm>
#include <queue>
#include <string>
#include <utility>

#include "molga/error.h"

namespace molga {
namespace {

constexpr int kMinRingSize = 3;
constexpr int kMaxRingSize = 7;

std::vector<Atom> copy_atoms(const MolGraph &g) {
  return {g.atoms().begin(), g.atoms().end()};
}

std::vector<Bond> copy_bonds(const MolGraph &g) {
  return {g.bonds().begin(), g.bonds().end()};
}

// Atoms reachable from `start` without crossing bond `cut`, ascending.
std::vector<int> fragment(const MolGraph &g, int start, int cut) {
  std::vector<bool> seen(g.atom_count(), false);
  std::vector<int> stack = {start};
  std::vector<int> out;
  seen[start] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (const MolGraph::Neighbor &nb : g.neighbors(v)) {
      if (nb.bond == cut || seen[nb.atom]) continue;
      seen[nb.atom] = true;
      stack.push_back(nb.atom);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> crossover_cuts(const MolGraph &g) {
  const std::vector<bool> ring = ring_bond_flags(g);
  std::vector<int> cuts;
  for (int b = 0; b < g.bond_count(); ++b) {
    if (!ring[b] && g.bond(b).order == BondOrder::kSingle) cuts.push_back(b);
  }
  return cuts;
}

struct Piece {
  std::vector<int> atoms;
  int attachment;
};

Piece pick_piece(const MolGraph &g, int cut, Rng &rng, bool size_biased) {
  const Bond &b = g.bond(cut);
  std::vector<int> first = fragment(g, b.begin, cut);
  std::vector<int> second = fragment(g, b.end, cut);
  bool take_first;
  if (size_biased) {
    const double weights[] = {static_cast<double>(first.size()),
                              static_cast<double>(second.size())};
    take_first = rng.weighted(weights) == 0;
  } else {
    take_first = rng.index(2) == 0;
  }
  if (take_first) return {std::move(first), b.begin};
  return {std::move(second), b.end};
}

}  // namespace

std::string_view to_string(EditKind kind) {
  switch (kind) {
    case EditKind::kInsertAtom:
      return "insert_atom";
    case EditKind::kDeleteAtom:
      return "delete_atom";
    case EditKind::kSubstituteElement:
      return "substitute_element";
    case EditKind::kChangeBondOrder:
      return "change_bond_order";
    case EditKind::kAddRingBond:
      return "add_ring_bond";
    case EditKind::kDeleteRingBond:
      return "delete_ring_bond";
  }
  return "unknown";
}

std::optional<EditKind> edit_kind_from_string(std::string_view name) {
  for (EditKind k : kAllEditKinds) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

GenopsStats &GenopsStats::operator+=(const GenopsStats &other) {
  for (std::size_t i = 0; i < kEditKindCount; ++i) applied[i] += other.applied[i];
  identity_mutations += other.identity_mutations;
  crossovers += other.crossovers;
  crossover_fallbacks += other.crossover_fallbacks;
  return *this;
}

std::vector<Edit> feasible_edits(const MolGraph &g, EditKind kind,
                                 const GenopsConfig &config) {
  std::vector<Edit> out;
  const int n = g.atom_count();
  std::vector<int> sums(n);
  for (int i = 0; i < n; ++i) sums[i] = g.bond_order_sum(i);

  switch (kind) {
    case EditKind::kInsertAtom:
      if (n >= kMaxHeavyAtoms) break;
      for (int i = 0; i < n; ++i) {
        if (can_hold(g.atom(i), sums[i] + 1)) out.push_back({kind, i});
      }
      break;

    case EditKind::kDeleteAtom:
      if (n < 2) break;
      for (int i = 0; i < n; ++i) {
        if (g.degree(i) != 1) continue;
        const MolGraph::Neighbor nb = g.neighbors(i)[0];
        const int lost = valence_of(g.bond(nb.bond).order);
        if (can_hold(g.atom(nb.atom), sums[nb.atom] - lost)) out.push_back({kind, i});
      }
      break;

    case EditKind::kSubstituteElement:
      for (int i = 0; i < n; ++i) {
        const Atom &old = g.atom(i);
        for (Element e : config.substitution_elements) {
          if (e == old.element && old.formal_charge == 0 && !old.bracket) continue;
          Atom replacement;
          replacement.element = e;
          if (can_hold(replacement, sums[i])) {
            out.push_back({kind, i, -1, static_cast<int>(e)});
          }
        }
      }
      break;

    case EditKind::kChangeBondOrder:
      for (int b = 0; b < g.bond_count(); ++b) {
        const Bond &bond = g.bond(b);
        for (int delta : {+1, -1}) {
          const int order = valence_of(bond.order) + delta;
          if (order < 1 || order > 3) continue;
          if (can_hold(g.atom(bond.begin), sums[bond.begin] + delta) &&
              can_hold(g.atom(bond.end), sums[bond.end] + delta)) {
            out.push_back({kind, b, -1, delta});
          }
        }
      }
      break;

    case EditKind::kAddRingBond: {
      std::vector<int> dist(n);
      for (int i = 0; i < n; ++i) {
        if (!can_hold(g.atom(i), sums[i] + 1)) continue;
        std::fill(dist.begin(), dist.end(), -1);
        dist[i] = 0;
        std::queue<int> q;
        q.push(i);
        while (!q.empty()) {
          const int v = q.front();
          q.pop();
          if (dist[v] == kMaxRingSize - 1) continue;
          for (const MolGraph::Neighbor &nb : g.neighbors(v)) {
            if (dist[nb.atom] < 0) {
              dist[nb.atom] = dist[v] + 1;
              q.push(nb.atom);
            }
          }
        }
        for (int j = i + 1; j < n; ++j) {
          if (dist[j] >= kMinRingSize - 1 && can_hold(g.atom(j), sums[j] + 1)) {
            out.push_back({kind, i, j});
          }
        }
      }
      break;
    }

    case EditKind::kDeleteRingBond: {
      const std::vector<bool> ring = ring_bond_flags(g);
      for (int b = 0; b < g.bond_count(); ++b) {
        if (!ring[b]) continue;
        const Bond &bond = g.bond(b);
        const int lost = valence_of(bond.order);
        if (can_hold(g.atom(bond.begin), sums[bond.begin] - lost) &&
            can_hold(g.atom(bond.end), sums[bond.end] - lost)) {
          out.push_back({kind, b});
        }
      }
      break;
    }
  }
  return out;
}

MolGraph apply_edit(const MolGraph &g, const Edit &edit) {
  std::vector<Atom> atoms = copy_atoms(g);
  std::vector<Bond> bonds = copy_bonds(g);
  switch (edit.kind) {
    case EditKind::kInsertAtom:
      atoms.push_back(Atom{});
      bonds.push_back({edit.a, static_cast<int>(atoms.size()) - 1});
      break;
    case EditKind::kDeleteAtom: {
      atoms.erase(atoms.begin() + edit.a);
      std::vector<Bond> kept;
      for (Bond b : bonds) {
        if (b.begin == edit.a || b.end == edit.a) continue;
        if (b.begin > edit.a) --b.begin;
        if (b.end > edit.a) --b.end;
        kept.push_back(b);
      }
      bonds = std::move(kept);
      break;
    }
    case EditKind::kSubstituteElement:
      atoms[edit.a] = Atom{};
      atoms[edit.a].element = static_cast<Element>(edit.value);
      break;
    case EditKind::kChangeBondOrder:
      bonds[edit.a].order =
          static_cast<BondOrder>(valence_of(bonds[edit.a].order) + edit.value);
      break;
    case EditKind::kAddRingBond:
      bonds.push_back({edit.a, edit.b});
      break;
    case EditKind::kDeleteRingBond:
      bonds.erase(bonds.begin() + edit.a);
      break;
  }
  return normalize_hydrogens(MolGraph(std::move(atoms), std::move(bonds)));
}

MutationResult mutate(const MolGraph &parent, Rng &rng, const GenopsConfig &config,
                      GenopsStats *stats) {
  for (int attempt = 0; attempt < config.max_attempts; ++attempt) {
    const EditKind kind = kAllEditKinds[rng.weighted(config.edit_weights)];
    const std::vector<Edit> edits = feasible_edits(parent, kind, config);
    if (edits.empty()) continue;
    MolGraph child = apply_edit(parent, edits[rng.index(edits.size())]);
    if (!check_valence(child) || !child.is_connected()) continue;
    if (stats) ++stats->applied[static_cast<std::size_t>(kind)];
    return {std::move(child), kind};
  }
  if (stats) ++stats->identity_mutations;
  return {parent, std::nullopt};
}

CrossoverResult crossover(const MolGraph &parent_a, const MolGraph &parent_b,
                          Rng &rng, const GenopsConfig &config, GenopsStats *stats) {
  const std::vector<int> cuts_a = crossover_cuts(parent_a);
  const std::vector<int> cuts_b = crossover_cuts(parent_b);
  if (!cuts_a.empty() && !cuts_b.empty()) {
    for (int attempt = 0; attempt < config.max_attempts; ++attempt) {
      const Piece pa = pick_piece(parent_a, cuts_a[rng.index(cuts_a.size())], rng,
                                  config.size_biased_crossover);
      const Piece pb = pick_piece(parent_b, cuts_b[rng.index(cuts_b.size())], rng,
                                  config.size_biased_crossover);
      if (pa.atoms.size() + pb.atoms.size() > static_cast<std::size_t>(kMaxHeavyAtoms)) {
        continue;
      }
      std::vector<Atom> atoms;
      std::vector<Bond> bonds;
      std::vector<int> map_a(parent_a.atom_count(), -1);
      std::vector<int> map_b(parent_b.atom_count(), -1);
      for (int v : pa.atoms) {
        map_a[v] = static_cast<int>(atoms.size());
        atoms.push_back(parent_a.atom(v));
      }
      for (int v : pb.atoms) {
        map_b[v] = static_cast<int>(atoms.size());
        atoms.push_back(parent_b.atom(v));
      }
      for (const Bond &b : parent_a.bonds()) {
        if (map_a[b.begin] >= 0 && map_a[b.end] >= 0) {
          bonds.push_back({map_a[b.begin], map_a[b.end], b.order});
        }
      }
      for (const Bond &b : parent_b.bonds()) {
        if (map_b[b.begin] >= 0 && map_b[b.end] >= 0) {
          bonds.push_back({map_b[b.begin], map_b[b.end], b.order});
        }
      }
      bonds.push_back({map_a[pa.attachment], map_b[pb.attachment]});
      MolGraph child =
          normalize_hydrogens(MolGraph(std::move(atoms), std::move(bonds)));
      if (!check_valence(child)) continue;
      if (stats) ++stats->crossovers;
      return {std::move(child), false, std::nullopt};
    }
  }
  if (stats) ++stats->crossover_fallbacks;
  MutationResult m = mutate(parent_a, rng, config, stats);
  return {std::move(m.graph), true, m.kind};
}

MolGraph add_carbon(const MolGraph &reference, Rng &rng) {
  std::vector<int> sites;
  if (reference.atom_count() < kMaxHeavyAtoms) {
    for (int i = 0; i < reference.atom_count(); ++i) {
      if (hydrogen_count(reference, i) >= 1) sites.push_back(i);
    }
  }
  if (sites.empty()) {
    throw Error(ErrorCode::kNoFreeValence, "no atom can accept a carbon");
  }
  const int site = sites[rng.index(sites.size())];
  std::vector<Atom> atoms = copy_atoms(reference);
  std::vector<Bond> bonds = copy_bonds(reference);
  if (atoms[site].bracket) --atoms[site].explicit_h;
  atoms.push_back(Atom{});
  bonds.push_back({site, static_cast<int>(atoms.size()) - 1});
  return normalize_hydrogens(MolGraph(std::move(atoms), std::move(bonds)));
}

std::vector<int> plan_parent_counts(std::size_t offspring, Rng &rng,
                                    const GenopsConfig &config) {
  std::vector<int> counts(offspring);
  for (int &c : counts) c = rng.bernoulli(config.crossover_probability) ? 2 : 1;
  return counts;
}

Child make_child(std::span<const MolGraph *const> parents,
                 std::span<const CanonicalForm> parent_forms, Rng &rng,
                 const GenopsConfig &config, GenopsStats *stats) {
  Provenance prov;
  prov.parents.assign(parent_forms.begin(), parent_forms.end());
  auto kind_name = [](const std::optional<EditKind> &k) {
    return k ? std::string(to_string(*k)) : std::string("identity");
  };
  if (parents.size() >= 2) {
    CrossoverResult cx = crossover(*parents[0], *parents[1], rng, config, stats);
    if (cx.fell_back) {
      prov.op = "crossover_fallback:" + kind_name(cx.fallback_kind);
      return {std::move(cx.graph), std::move(prov)};
    }
    if (rng.bernoulli(config.mutate_after_crossover)) {
      MutationResult m = mutate(cx.graph, rng, config, stats);
      prov.op = "crossover+mutate:" + kind_name(m.kind);
      return {std::move(m.graph), std::move(prov)};
    }
    prov.op = "crossover";
    return {std::move(cx.graph), std::move(prov)};
  }
  MutationResult m = mutate(*parents[0], rng, config, stats);
  prov.op = "mutate:" + kind_name(m.kind);
  return {std::move(m.graph), std::move(prov)};
}

}  // namespace molga
