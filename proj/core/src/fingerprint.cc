//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#include "molga/fingerprint.h"

#include <algorithm>
#include <utility>

#include "molga/error.h"
#include "molga/random.h"

namespace molga {
namespace {

std::uint64_t hash_words(std::span<const std::uint64_t> words) {
  std::uint64_t h = mix64(kFingerprintSeed ^ words.size());
  for (std::uint64_t w : words) h = mix64(h ^ mix64(w));
  return h;
}

}  // namespace

Fingerprint::Fingerprint(std::vector<std::uint64_t> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

Fingerprint morgan_fingerprint(const MolGraph &g, int radius) {
  if (radius < 1 || radius > 4) {
    throw Error(ErrorCode::kConfigError, "fingerprint radius must be in [1, 4]");
  }
  if (!check_valence(g)) {
    throw Error(ErrorCode::kInvalidMolecule, "fingerprint of an invalid molecule");
  }
  const int n = g.atom_count();
  std::vector<std::uint64_t> current(n);
  std::vector<std::uint64_t> all;
  all.reserve(static_cast<std::size_t>(n) * (radius + 1));
  for (int i = 0; i < n; ++i) {
    const Atom &a = g.atom(i);
    const std::uint64_t words[] = {
        0, static_cast<std::uint64_t>(atomic_number(a.element)),
        static_cast<std::uint64_t>(a.formal_charge + 8),
        static_cast<std::uint64_t>(hydrogen_count(g, i)),
        static_cast<std::uint64_t>(g.degree(i))};
    current[i] = hash_words(words);
    all.push_back(current[i]);
  }
  std::vector<std::uint64_t> next(n);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> env;
  std::vector<std::uint64_t> words;
  for (int r = 1; r <= radius; ++r) {
    for (int i = 0; i < n; ++i) {
      env.clear();
      for (const MolGraph::Neighbor &nb : g.neighbors(i)) {
        env.emplace_back(valence_of(g.bond(nb.bond).order), current[nb.atom]);
      }
      std::sort(env.begin(), env.end());
      words.assign({static_cast<std::uint64_t>(r), current[i]});
      for (const auto &[order, id] : env) {
        words.push_back(order);
        words.push_back(id);
      }
      next[i] = hash_words(words);
      all.push_back(next[i]);
    }
    std::swap(current, next);
  }
  return Fingerprint(std::move(all));
}

double tanimoto(const Fingerprint &a, const Fingerprint &b) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::kEmptyFingerprint, "tanimoto of an empty fingerprint");
  }
  std::size_t common = 0;
  auto x = a.ids().begin();
  auto y = b.ids().begin();
  while (x != a.ids().end() && y != b.ids().end()) {
    if (*x < *y) {
      ++x;
    } else if (*y < *x) {
      ++y;
    } else {
      ++common;
      ++x;
      ++y;
    }
  }
  const std::size_t unite = a.size() + b.size() - common;
  return static_cast<double>(common) / static_cast<double>(unite);
}

}  // namespace molga
