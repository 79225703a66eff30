// Analytic rank-selection mixture, obtained by numerically integrating the
// pool-size step function over u, plus a binned chi-squared comparison.

#ifndef MOLGA_TESTS_SAMPLER_ORACLE_H_
#define MOLGA_TESTS_SAMPLER_ORACLE_H_

#include <cmath>
#include <cstddef>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

namespace molga::testing {

// P(rank = r) = E_u[ 1{r < pool(u)} / pool(u) ], u ~ U[min_exponent, 0],
// pool(u) = max(1, ceil(10^u n)). Midpoint rule on `steps` cells; the pool
// is recomputed independently of the library.
inline std::vector<double> rank_mixture(std::size_t n, double min_exponent = -3.0,
                                        std::size_t steps = 4000000) {
  std::vector<double> pool_mass(n + 1, 0.0);
  const double width = -min_exponent / static_cast<double>(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const double u = min_exponent + (static_cast<double>(i) + 0.5) * width;
    double pool = std::ceil(std::pow(10.0, u) * static_cast<double>(n));
    if (pool < 1) pool = 1;
    if (pool > static_cast<double>(n)) pool = static_cast<double>(n);
    pool_mass[static_cast<std::size_t>(pool)] += 1.0 / static_cast<double>(steps);
  }
  std::vector<double> p(n, 0.0);
  double tail = 0.0;
  for (std::size_t m = n; m >= 1; --m) {
    tail += pool_mass[m] / static_cast<double>(m);
    p[m - 1] = tail;
  }
  return p;
}

struct ChiSquared {
  double statistic = 0.0;
  std::size_t dof = 0;
  double p_value = 0.0;
};

// Adjacent ranks are merged from the tail until each bin expects >= 5.
inline ChiSquared chi_squared(const std::vector<std::size_t> &counts,
                              const std::vector<double> &probs, std::size_t draws) {
  std::vector<double> obs_bins, exp_bins;
  double obs = 0.0, exp = 0.0;
  for (std::size_t i = counts.size(); i-- > 0;) {
    obs += static_cast<double>(counts[i]);
    exp += probs[i] * static_cast<double>(draws);
    if (exp >= 5.0) {
      obs_bins.push_back(obs);
      exp_bins.push_back(exp);
      obs = exp = 0.0;
    }
  }
  if (exp > 0.0 && !exp_bins.empty()) {
    obs_bins.back() += obs;
    exp_bins.back() += exp;
  }
  ChiSquared out;
  for (std::size_t i = 0; i < obs_bins.size(); ++i) {
    const double d = obs_bins[i] - exp_bins[i];
    out.statistic += d * d / exp_bins[i];
  }
  out.dof = obs_bins.size() - 1;
  boost::math::chi_squared dist(static_cast<double>(out.dof));
  out.p_value = boost::math::cdf(boost::math::complement(dist, out.statistic));
  return out;
}

}  // namespace molga::testing

#endif  // MOLGA_TESTS_SAMPLER_ORACLE_H_
