//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGA_FINGERPRINT_H_
#define MOLGA_FINGERPRINT_H_

#include <cstdint>
#include <span>
#include <vector>

#include "molga/molgraph.h"

namespace molga {

// Seed of every substructure hash. Changing it changes every fingerprint.
inline constexpr std::uint64_t kFingerprintSeed = 0x6d6f6c67612d6670ULL;

inline constexpr int kDefaultFingerprintRadius = 2;

// Set of hashed circular-substructure identifiers, stored sorted and unique.
class Fingerprint {
 public:
  Fingerprint() = default;
  explicit Fingerprint(std::vector<std::uint64_t> ids);

  std::span<const std::uint64_t> ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }

  friend bool operator==(const Fingerprint &, const Fingerprint &) = default;

 private:
  std::vector<std::uint64_t> ids_;
};

// Morgan/ECFP-style identifiers for every atom environment of radius
// 0..radius. Radius 0 encodes (element, charge, hydrogens, degree); each
// further iteration hashes the previous identifier with the sorted
// (bond order, neighbour identifier) list. radius must be in [1, 4].
// Throws InvalidMolecule for graphs failing check_valence, ConfigError for a
// bad radius.
Fingerprint morgan_fingerprint(const MolGraph &g,
                               int radius = kDefaultFingerprintRadius);

// |a & b| / |a | b|. Throws EmptyFingerprint if either side is empty.
double tanimoto(const Fingerprint &a, const Fingerprint &b);

}  // namespace molga

#endif  // MOLGA_FINGERPRINT_H_
