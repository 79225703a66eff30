//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#include "molga/sampler.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "molga/error.h"

namespace molga {

std::string_view to_string(SamplerMode mode) {
  return mode == SamplerMode::kRandom ? "random" : "quasi_grid";
}

SamplerMode sampler_mode_from_string(std::string_view name) {
  if (name == "random") return SamplerMode::kRandom;
  if (name == "quasi_grid") return SamplerMode::kQuasiGrid;
  throw Error(ErrorCode::kConfigError,
              "unknown sampler mode '" + std::string(name) + "'");
}

std::size_t pool_size_for(double epsilon, std::size_t population_size) {
  const double x = epsilon * static_cast<double>(population_size);
  double c = std::ceil(x);
  if (c - x > 0.0 && (x - (c - 1.0)) <= 1e-9 * std::max(1.0, x)) c -= 1.0;
  const std::size_t pool = c < 1.0 ? 1 : static_cast<std::size_t>(c);
  return std::min(std::max<std::size_t>(pool, 1), population_size);
}

QuantileDraw QuantileDraw::at(double u, std::size_t population_size) {
  if (population_size == 0) {
    throw Error(ErrorCode::kEmptyPopulation, "sampling from an empty population");
  }
  const double epsilon = std::pow(10.0, u);
  return {u, epsilon, pool_size_for(epsilon, population_size)};
}

std::vector<double> quasi_grid(std::size_t k, double min_exponent) {
  std::vector<double> u(k);
  for (std::size_t i = 0; i < k; ++i) {
    u[i] = min_exponent +
           (-min_exponent) * (static_cast<double>(i) + 0.5) / static_cast<double>(k);
  }
  return u;
}

std::size_t sample_one(std::size_t population_size, const QuantileDraw &draw,
                       Rng &rng) {
  if (population_size == 0) {
    throw Error(ErrorCode::kEmptyPopulation, "sampling from an empty population");
  }
  return rng.index(std::min(draw.pool_size, population_size));
}

SampleSubset sample_batch(std::size_t population_size, std::size_t k, Rng &rng,
                          const SamplerConfig &config) {
  if (population_size == 0) {
    throw Error(ErrorCode::kEmptyPopulation, "sampling from an empty population");
  }
  if (k == 0) throw Error(ErrorCode::kConfigError, "sample batch size must be >= 1");
  if (!(config.min_exponent <= 0.0)) {
    throw Error(ErrorCode::kConfigError, "sampler.min_exponent must be <= 0");
  }
  SampleSubset out;
  out.ranks.reserve(k);
  out.draws.reserve(k);
  const std::vector<double> grid = config.mode == SamplerMode::kQuasiGrid
                                       ? quasi_grid(k, config.min_exponent)
                                       : std::vector<double>{};
  for (std::size_t i = 0; i < k; ++i) {
    const double u = config.mode == SamplerMode::kQuasiGrid
                         ? grid[i]
                         : rng.uniform(config.min_exponent, 0.0);
    const QuantileDraw draw = QuantileDraw::at(u, population_size);
    out.ranks.push_back(sample_one(population_size, draw, rng));
    out.draws.push_back(draw);
  }
  return out;
}

}  // namespace molga
