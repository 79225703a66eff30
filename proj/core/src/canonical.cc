//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#include "molga/canonical.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <utility>

#include "molga/error.h"
#include "writer_internal.h"

namespace molga {
namespace {

// Replaces each key by the number of keys strictly smaller than it.
template <class Key>
std::vector<int> rank_keys(const std::vector<Key> &keys) {
  const int n = static_cast<int>(keys.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<int> classes(n);
  for (int i = 0; i < n; ++i) {
    if (i > 0 && keys[order[i - 1]] == keys[order[i]]) {
      classes[order[i]] = classes[order[i - 1]];
    } else {
      classes[order[i]] = i;
    }
  }
  return classes;
}

int count_distinct(const std::vector<int> &classes) {
  std::vector<bool> used(classes.size(), false);
  int distinct = 0;
  for (int c : classes) {
    if (!used[c]) {
      used[c] = true;
      ++distinct;
    }
  }
  return distinct;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

class LeafSearch {
 public:
  explicit LeafSearch(const MolGraph &g) : g_(g) {}

  void run() {
    std::vector<int> prefix;
    visit(initial_atom_classes(g_), prefix);
  }

  const std::vector<int> &best_ranks() const { return best_ranks_; }
  const std::string &best_string() const { return best_; }

 private:
  void visit(std::vector<int> classes, std::vector<int> &prefix) {
    classes = refine_classes(g_, std::move(classes));
    const int n = g_.atom_count();

    std::vector<int> cell_size(n, 0);
    for (int c : classes) ++cell_size[c];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      leaf(classes);
      return;
    }

    std::vector<int> explored;
    for (int v = 0; v < n; ++v) {
      if (classes[v] != target) continue;
      if (!explored.empty() && equivalent_to_explored(v, explored, prefix)) {
        continue;
      }
      explored.push_back(v);
      std::vector<int> child = classes;
      individualize(child, v);
      prefix.push_back(v);
      visit(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  // v is skipped when an automorphism fixing the prefix pointwise maps an
  // already explored sibling onto it.
  bool equivalent_to_explored(int v, const std::vector<int> &explored,
                              const std::vector<int> &prefix) const {
    if (automorphisms_.empty()) return false;
    UnionFind orbits(g_.atom_count());
    bool any = false;
    for (const std::vector<int> &gamma : automorphisms_) {
      const bool fixes_prefix = std::all_of(
          prefix.begin(), prefix.end(), [&](int p) { return gamma[p] == p; });
      if (!fixes_prefix) continue;
      any = true;
      for (int a = 0; a < g_.atom_count(); ++a) orbits.unite(a, gamma[a]);
    }
    if (!any) return false;
    const int root = orbits.find(v);
    return std::any_of(explored.begin(), explored.end(),
                       [&](int u) { return orbits.find(u) == root; });
  }

  void leaf(const std::vector<int> &ranks) {
    std::vector<int> order;
    std::string s = internal::write_ranked(g_, ranks, &order);
    if (first_order_.empty()) {
      first_ = s;
      first_order_ = order;
    } else if (s == first_) {
      record_automorphism(first_order_, order);
    }
    if (best_order_.empty() || s < best_) {
      best_ = std::move(s);
      best_order_ = std::move(order);
      best_ranks_ = ranks;
    } else if (s == best_ && best_order_ != first_order_) {
      record_automorphism(best_order_, order);
    }
  }

  void record_automorphism(const std::vector<int> &from,
                           const std::vector<int> &to) {
    std::vector<int> gamma(g_.atom_count());
    bool identity = true;
    for (std::size_t i = 0; i < from.size(); ++i) {
      gamma[from[i]] = to[i];
      identity = identity && from[i] == to[i];
    }
    if (!identity) automorphisms_.push_back(std::move(gamma));
  }

  const MolGraph &g_;
  std::string first_;
  std::vector<int> first_order_;
  std::string best_;
  std::vector<int> best_order_;
  std::vector<int> best_ranks_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

std::vector<int> initial_atom_classes(const MolGraph &g) {
  using Key = std::array<int, 6>;
  std::vector<Key> keys(g.atom_count());
  for (int i = 0; i < g.atom_count(); ++i) {
    const Atom &a = g.atom(i);
    keys[i] = {atomic_number(a.element), a.formal_charge, g.degree(i),
               hydrogen_count(g, i), g.bond_order_sum(i), a.bracket ? 1 : 0};
  }
  return rank_keys(keys);
}

std::vector<int> refine_classes(const MolGraph &g, std::vector<int> classes) {
  const int n = g.atom_count();
  int distinct = count_distinct(classes);
  std::vector<std::vector<int>> signatures(n);
  while (distinct < n) {
    for (int a = 0; a < n; ++a) {
      std::vector<int> &sig = signatures[a];
      sig.clear();
      for (const MolGraph::Neighbor &nb : g.neighbors(a)) {
        sig.push_back(classes[nb.atom] * 4 + valence_of(g.bond(nb.bond).order));
      }
      std::sort(sig.begin(), sig.end());
      sig.insert(sig.begin(), classes[a]);
    }
    std::vector<int> next = rank_keys(signatures);
    const int next_distinct = count_distinct(next);
    if (next_distinct == distinct) break;
    classes = std::move(next);
    distinct = next_distinct;
  }
  return classes;
}

void individualize(std::vector<int> &classes, int atom) {
  const int cell = classes[atom];
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i] == cell && static_cast<int>(i) != atom) classes[i] = cell + 1;
  }
}

std::vector<int> canonical_ranks(const MolGraph &g) {
  LeafSearch search(g);
  search.run();
  return search.best_ranks();
}

CanonicalForm canonical_form(const MolGraph &g) {
  if (!check_valence(g)) {
    throw Error(ErrorCode::kInvalidMolecule,
                "canonical form requested for an invalid molecule");
  }
  if (!g.is_connected()) {
    throw Error(ErrorCode::kInvalidMolecule,
                "canonical form requested for a disconnected graph");
  }
  const MolGraph normalized = normalize_hydrogens(g);
  LeafSearch search(normalized);
  search.run();
  return {search.best_string()};
}

}  // namespace molga
