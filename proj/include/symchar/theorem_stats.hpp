#pragma once

// Exact and Monte Carlo checks of the vanishing-probability lower bound
//
//   1 >= P_n >= Q_n - |Omega_n| / p_n,
//
// where P_n is the chance that chi^lambda(g) = 0 for uniform lambda and
// uniform g in S_n, Omega_n is a set of cycle types and Q_n the chance that
// g's cycle type lies in Omega_n. Omega_n defaults to the partitions whose
// largest part reaches C sqrt(n) (log n + f(n)).

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <vector>

#include "symchar/characters.hpp"
#include "symchar/errors.hpp"
#include "symchar/exact.hpp"
#include "symchar/partitions.hpp"
#include "symchar/sampling.hpp"
#include "symchar/stats.hpp"

namespace symchar {

/// Largest-part scale of a uniform random partition, sqrt(6) / (2 pi).
inline const double kDefaultOmegaC = std::sqrt(6.0) / (2.0 * std::numbers::pi);

struct OmegaSpec {
  double C = kDefaultOmegaC;
  std::optional<double> f_constant;  // nullopt: f(n) = log n
  bool strict = false;               // lambda_1 > T instead of >= T

  double f(int n) const { return f_constant ? *f_constant : std::log(static_cast<double>(n)); }
};

inline void validate(const OmegaSpec& spec) {
  if (!(spec.C > 0.0) || !std::isfinite(spec.C)) throw ValidationError("Omega constant C must be a positive finite number");
  if (spec.f_constant && !std::isfinite(*spec.f_constant)) throw ValidationError("f(n) constant must be finite");
}

/// The real threshold T = C sqrt(n) (log n + f(n)).
inline double omega_threshold(int n, const OmegaSpec& spec) {
  const double dn = n;
  return spec.C * std::sqrt(dn) * (std::log(dn) + spec.f(n));
}

/// Smallest integer lambda_1 that satisfies the threshold (>= T, or > T when strict).
inline long long omega_min_largest_part(int n, const OmegaSpec& spec) {
  validate(spec);
  if (n < 2) throw ValidationError("Omega_n needs n >= 2");
  const long double t = static_cast<long double>(omega_threshold(n, spec));
  if (t > static_cast<long double>(n) + 1) return static_cast<long long>(n) + 1;
  const long double cut = spec.strict ? std::floor(t) + 1 : std::ceil(t);
  return std::max(1LL, static_cast<long long>(cut));
}

inline bool in_omega(const Partition& lambda, long long min_largest) { return lambda.largest() >= min_largest; }

inline std::vector<Partition> omega_set(int n, const OmegaSpec& spec, std::uint64_t cap = kDefaultEnumerationCap) {
  const long long cut = omega_min_largest_part(n, spec);
  std::vector<Partition> out;
  for (auto& lambda : enumerate_partitions(n, cap)) {
    if (in_omega(lambda, cut)) out.push_back(std::move(lambda));
  }
  return out;
}

/// Q = sum over Omega of 1/z_lambda, the probability that a uniform element
/// of S_n has cycle type in Omega.
inline Rational q_of_omega(int n, std::span<const Partition> omega) {
  Rational q = 0;
  for (const auto& lambda : omega) {
    if (lambda.n() != n) throw ValidationError("q_of_omega: " + lambda.to_string() + " does not partition " + std::to_string(n));
    q += Rational(BigInt(1), centralizer_order(lambda));
  }
  return q;
}

/// P_n = (1/p_n) sum_mu #{lambda : chi^lambda(mu) = 0} / z_mu.
inline Rational exact_pzero(const CharacterTable& table) {
  const std::size_t p = table.size();
  Rational total = 0;
  for (std::size_t c = 0; c < p; ++c) {
    std::uint64_t zeros = 0;
    for (std::size_t r = 0; r < p; ++r) zeros += table.at(r, c) == 0 ? 1 : 0;
    if (zeros) total += Rational(BigInt(zeros), centralizer_order(table.labels[c]));
  }
  return total / BigInt(p);
}

inline Rational exact_pzero(int n, const TableOptions& opts = {}) { return exact_pzero(character_table(n, opts)); }

struct BoundReport {
  int n = 0;
  BigInt p_n;
  BigInt omega_count;
  long long min_largest_part = 0;
  Rational q_n;
  Rational r_n;
  Rational lower_bound;
  std::optional<Rational> exact_p;

  /// 1 >= exact_p >= lower_bound; vacuously true without exact_p.
  bool inequality_holds() const { return !exact_p || (*exact_p <= 1 && *exact_p >= lower_bound); }
};

namespace detail {

inline BoundReport bound_without_exact(int n, const OmegaSpec& spec, std::uint64_t cap) {
  const auto omega = omega_set(n, spec, cap);
  BoundReport rep;
  rep.n = n;
  rep.p_n = partition_count(n);
  rep.omega_count = omega.size();
  rep.min_largest_part = omega_min_largest_part(n, spec);
  rep.q_n = q_of_omega(n, omega);
  rep.r_n = Rational(rep.omega_count, rep.p_n);
  rep.lower_bound = rep.q_n - rep.r_n;
  return rep;
}

}  // namespace detail

inline BoundReport lemma_bound(int n, const OmegaSpec& spec, bool compute_exact, const TableOptions& opts = {}) {
  BoundReport rep = detail::bound_without_exact(n, spec, opts.cap);
  if (compute_exact) rep.exact_p = exact_pzero(n, opts);
  return rep;
}

/// Same report, reusing an already built table of S_n for the exact value.
inline BoundReport lemma_bound(const CharacterTable& table, const OmegaSpec& spec, std::uint64_t cap = kDefaultEnumerationCap) {
  BoundReport rep = detail::bound_without_exact(table.n, spec, cap);
  rep.exact_p = exact_pzero(table);
  return rep;
}

/// Uniform lambda (by rank) and mu with probability 1/z_mu; fraction of zero chi^lambda(mu).
/// The rank/unrank table holds (n+1)^2 counts, which `cap` bounds.
inline SampleSummary montecarlo_pzero(int n, std::uint64_t samples, std::uint64_t seed, unsigned threads = 1,
                                      std::uint64_t cap = kDefaultEnumerationCap) {
  if (n < 1) throw ValidationError("montecarlo_pzero: n must be positive");
  if (static_cast<double>(n + 1) * static_cast<double>(n + 1) > static_cast<double>(cap)) {
    throw CapExceeded("uniform partition sampling at n = " + std::to_string(n) + " needs a counting table of " +
                      std::to_string((static_cast<std::uint64_t>(n) + 1) * (static_cast<std::uint64_t>(n) + 1)) +
                      " entries, above the cap of " + std::to_string(cap));
  }
  const BoundedPartitionCounts<BigInt> counts(n);
  return estimate_proportion(samples, seed, threads, [&](SplitMix64& rng) {
    const Partition lambda = uniform_partition(n, counts, rng);
    const Partition mu = random_cycle_type(n, rng);
    return mn_value(lambda, mu) == 0;
  });
}

/// pi^{-1/2} int_{-inf}^x e^{-t^2} dt = (1 + erf x) / 2.
inline double limit_cdf(double x) { return 0.5 * std::erfc(-x); }

/// Limit probability of alpha < (m - log n)/sqrt(2 log n) < beta.
inline double limit_mass(double alpha, double beta) {
  if (!(alpha < beta)) throw ValidationError("limit_mass: need alpha < beta");
  return limit_cdf(beta) - limit_cdf(alpha);
}

struct GoncharovSample {
  int n = 0;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  std::vector<double> normalized_values;  // (m - log n) / sqrt(2 log n), in sample order
  double ks_distance = 0.0;
  double mean_cycles = 0.0;
};

inline GoncharovSample goncharov_experiment(int n, std::uint64_t samples, std::uint64_t seed, unsigned threads = 1) {
  if (n < 2) throw ValidationError("goncharov_experiment: n must be at least 2");
  if (samples == 0) throw ValidationError("samples must be at least 1");
  const double log_n = std::log(static_cast<double>(n));
  const double scale = std::sqrt(2.0 * log_n);
  const auto blocks = run_blocks(samples, seed, threads, [&](SplitMix64& rng, std::uint64_t first, std::uint64_t last) {
    std::vector<int> m;
    m.reserve(static_cast<std::size_t>(last - first));
    for (std::uint64_t i = first; i < last; ++i) m.push_back(random_cycle_type(n, rng).length());
    return m;
  });
  GoncharovSample out;
  out.n = n;
  out.sample_count = samples;
  out.seed = seed;
  out.normalized_values.reserve(static_cast<std::size_t>(samples));
  long double sum = 0;
  for (const auto& block : blocks) {
    for (int m : block) {
      sum += m;
      out.normalized_values.push_back((m - log_n) / scale);
    }
  }
  out.mean_cycles = static_cast<double>(sum / static_cast<long double>(samples));
  out.ks_distance = ks_distance(out.normalized_values, limit_cdf);
  return out;
}

/// Smallest integer cycle length reaching n / (2 log n).
inline int long_cycle_min_length(int n) {
  if (n < 3) throw ValidationError("long cycle threshold needs n >= 3");
  return static_cast<int>(std::ceil(n / (2.0 * std::log(static_cast<double>(n)))));
}

inline SampleSummary long_cycle_frequency(int n, std::uint64_t samples, std::uint64_t seed, unsigned threads = 1) {
  const int need = long_cycle_min_length(n);
  SampleSummary s = estimate_proportion(samples, seed, threads, [&](SplitMix64& rng) {
    return random_cycle_type(n, rng).largest() >= need;
  });
  s.extra["min_cycle_length"] = need;
  return s;
}

/// Exact fraction of S_n with a cycle of length >= n/(2 log n), by visiting
/// every permutation. Only for small n.
inline Rational long_cycle_exact(int n) {
  const int need = long_cycle_min_length(n);
  if (n > 10) throw ValidationError("long_cycle_exact enumerates n!; n must be at most 10");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<char> seen(perm.size());
  std::uint64_t hits = 0, total = 0;
  do {
    ++total;
    std::fill(seen.begin(), seen.end(), 0);
    int longest = 0;
    for (int start = 0; start < n; ++start) {
      int len = 0;
      for (int x = start; !seen[static_cast<std::size_t>(x)]; x = perm[static_cast<std::size_t>(x)]) {
        seen[static_cast<std::size_t>(x)] = 1;
        ++len;
      }
      longest = std::max(longest, len);
    }
    hits += longest >= need ? 1 : 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Rational(BigInt(hits), BigInt(total));
}

}  // namespace symchar
