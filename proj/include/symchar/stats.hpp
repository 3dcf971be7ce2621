#pragma once

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "symchar/errors.hpp"

namespace symchar {

/// Pearson statistic sum (O - E)^2 / E.
inline double chi_square_statistic(std::span<const double> observed, std::span<const double> expected) {
  if (observed.size() != expected.size()) throw ValidationError("chi_square_statistic: size mismatch");
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double d = observed[i] - expected[i];
    stat += d * d / expected[i];
  }
  return stat;
}

/// Upper critical value of chi^2 with `df` degrees of freedom at confidence `level`.
inline double chi_square_critical(double df, double level) {
  return boost::math::quantile(boost::math::chi_squared_distribution<double>(df), level);
}

/// Kolmogorov-Smirnov distance sup_x |F_emp(x) - cdf(x)| against a continuous cdf.
/// Ties are handled: the sup is attained at the edges of each jump.
template <class Cdf>
double ks_distance(std::vector<double> values, Cdf&& cdf) {
  if (values.empty()) throw ValidationError("ks_distance: empty sample");
  std::sort(values.begin(), values.end());
  const auto count = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double f = cdf(values[i]);
    d = std::max({d, f - static_cast<double>(i) / count, static_cast<double>(i + 1) / count - f});
  }
  return d;
}

}  // namespace symchar
