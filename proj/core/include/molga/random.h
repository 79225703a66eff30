//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGA_RANDOM_H_
#define MOLGA_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace molga {

// splitmix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Random source with platform-independent derived distributions.
//
// The standard <random> distributions are implementation-defined, so all
// integer and real draws are derived here from the raw mt19937_64 stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Stream for (run seed, generation, lane); identical regardless of how
  // lanes are scheduled across threads.
  static Rng derive(std::uint64_t seed, std::uint64_t generation,
                    std::uint64_t lane) {
    return Rng(mix64(mix64(mix64(seed) ^ generation) ^ lane));
  }

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of resolution.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform in [0, n); n > 0. Rejection sampling, no modulo bias.
  std::size_t index(std::size_t n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return static_cast<std::size_t>(x % bound);
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // Index drawn with probability proportional to weights (all >= 0, sum > 0).
  std::size_t weighted(std::span<const double> weights);

  template <class Range>
  void shuffle(Range &r) {
    const std::size_t n = std::size(r);
    for (std::size_t i = n; i > 1; --i) {
      std::swap(r[i - 1], r[index(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace molga

#endif  // MOLGA_RANDOM_H_
