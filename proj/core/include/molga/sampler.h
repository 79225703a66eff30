//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGA_SAMPLER_H_
#define MOLGA_SAMPLER_H_

#include <cstddef>
#include <string_view>
#include <vector>

#include "molga/random.h"

namespace molga {

// Rank-based parent selection. A draw picks u in [min_exponent, 0], sets
// epsilon = 10^u and returns a member uniformly from the top
// max(1, ceil(epsilon * n)) ranks. Only ranks are ever consulted, never
// scores.

enum class SamplerMode { kRandom, kQuasiGrid };

std::string_view to_string(SamplerMode mode);
SamplerMode sampler_mode_from_string(std::string_view name);

struct SamplerConfig {
  SamplerMode mode = SamplerMode::kQuasiGrid;
  double min_exponent = -3.0;
};

struct QuantileDraw {
  double u = 0.0;
  double epsilon = 1.0;
  std::size_t pool_size = 1;

  // Throws EmptyPopulation when population_size is 0.
  static QuantileDraw at(double u, std::size_t population_size);
};

// max(1, ceil(epsilon * n)) clamped to n. Products within 1e-9 (relative)
// above an integer are rounded down to it, so 10^-2 * 1000 gives 10.
std::size_t pool_size_for(double epsilon, std::size_t population_size);

// Midpoints of k equal subintervals of [min_exponent, 0].
std::vector<double> quasi_grid(std::size_t k, double min_exponent = -3.0);

// 0-based rank drawn uniformly from [0, draw.pool_size).
std::size_t sample_one(std::size_t population_size, const QuantileDraw &draw,
                       Rng &rng);

struct SampleSubset {
  std::vector<std::size_t> ranks;  // 0-based, best first
  std::vector<QuantileDraw> draws;  // draws[i] produced ranks[i]
};

// k draws (k >= 1): independent uniform u for kRandom, the fixed midpoint
// grid for kQuasiGrid.
SampleSubset sample_batch(std::size_t population_size, std::size_t k, Rng &rng,
                          const SamplerConfig &config = {});

}  // namespace molga

#endif  // MOLGA_SAMPLER_H_
