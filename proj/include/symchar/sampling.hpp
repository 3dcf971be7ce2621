#pragma once

// Seeded, reproducible sampling.
//
// The generator is SplitMix64 (Steele, Lea, Flood 2014): a 64-bit counter
// advanced by the golden-ratio increment and passed through a fixed
// finalizer. Substreams are keyed by (master seed, block index), so the
// sample sequence of a run depends only on the seed and sample count, never
// on how many workers processed it.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symchar/detail/parallel.hpp"
#include "symchar/errors.hpp"
#include "symchar/exact.hpp"
#include "symchar/partitions.hpp"

namespace symchar {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = kDefaultSeed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Independent stream for block `index` of a run seeded with `seed`.
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix(mix(seed) ^ mix(index + 0x632be59bd9b4e019ULL)));
  }

 private:
  std::uint64_t state_;
};

/// Uniform integer in [0, bound) by rejection (no modulo bias).
inline std::uint64_t uniform_below(std::uint64_t bound, SplitMix64& rng) {
  if (bound == 0) throw ValidationError("uniform_below: bound must be positive");
  const std::uint64_t reject_below = (0 - bound) % bound;  // 2^64 mod bound
  while (true) {
    const std::uint64_t r = rng();
    if (r >= reject_below) return r % bound;
  }
}

/// Uniform BigInt in [0, bound): draw msb(bound-1)+1 random bits, reject if >= bound.
inline BigInt uniform_below(const BigInt& bound, SplitMix64& rng) {
  if (bound <= 0) throw ValidationError("uniform_below: bound must be positive");
  if (bound == 1) return 0;
  const BigInt top = bound - 1;
  const std::size_t bits = boost::multiprecision::msb(top) + 1;
  const std::size_t words = (bits + 63) / 64;
  const BigInt mask = (BigInt(1) << bits) - 1;
  while (true) {
    BigInt r = 0;
    for (std::size_t w = 0; w < words; ++w) r = (r << 64) | BigInt(rng());
    r &= mask;
    if (r < bound) return r;
  }
}

/// Exactly uniform partition of n: uniform rank, then unrank. `counts`
/// must cover n.
inline Partition uniform_partition(int n, const BoundedPartitionCounts<BigInt>& counts, SplitMix64& rng) {
  if (n < 0) throw ValidationError("uniform_partition: n must be nonnegative");
  return counts.unrank(n, uniform_below(counts.total(n), rng));
}

inline Partition uniform_partition(int n, SplitMix64& rng) {
  return uniform_partition(n, BoundedPartitionCounts<BigInt>(n), rng);
}

/// Cycle type of a uniform random permutation of n points, without building
/// it: the cycle through the smallest unplaced point has length uniform on
/// {1, ..., remaining}.
inline Partition random_cycle_type(int n, SplitMix64& rng) {
  if (n < 1) throw ValidationError("random_cycle_type: n must be positive");
  std::vector<int> lengths;
  int remaining = n;
  while (remaining > 0) {
    const int len = 1 + static_cast<int>(uniform_below(static_cast<std::uint64_t>(remaining), rng));
    lengths.push_back(len);
    remaining -= len;
  }
  return Partition::from_unsorted(std::move(lengths));
}

/// Number of cycles only; same stream consumption as random_cycle_type.
inline int random_cycle_count(int n, SplitMix64& rng) {
  if (n < 1) throw ValidationError("random_cycle_count: n must be positive");
  int cycles = 0;
  for (int remaining = n; remaining > 0; ++cycles) {
    remaining -= 1 + static_cast<int>(uniform_below(static_cast<std::uint64_t>(remaining), rng));
  }
  return cycles;
}

struct SampleSummary {
  double estimate = 0.0;
  std::uint64_t samples = 0;
  double std_error = 0.0;
  std::uint64_t seed = 0;
  std::map<std::string, double> extra;
};

inline double proportion_std_error(double p_hat, std::uint64_t samples) {
  return std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(samples));
}

inline constexpr std::uint64_t kSamplesPerBlock = 4096;

/// Splits [0, samples) into fixed blocks, runs body(rng, first, last) for each
/// block with its own substream, and returns the per-block results in block
/// order. The split does not depend on `threads`.
template <class Body>
auto run_blocks(std::uint64_t samples, std::uint64_t seed, unsigned threads, Body&& body) {
  using Result = decltype(body(std::declval<SplitMix64&>(), std::uint64_t{}, std::uint64_t{}));
  const std::uint64_t blocks = (samples + kSamplesPerBlock - 1) / kSamplesPerBlock;
  std::vector<Result> results(static_cast<std::size_t>(blocks));
  detail::parallel_for(static_cast<std::size_t>(blocks), threads, [&](std::size_t b) {
    SplitMix64 rng = SplitMix64::substream(seed, b);
    const std::uint64_t first = b * kSamplesPerBlock;
    const std::uint64_t last = std::min(samples, first + kSamplesPerBlock);
    results[b] = body(rng, first, last);
  });
  return results;
}

/// Seeded proportion estimate: fraction of trials for which trial(rng) is true.
template <class Trial>
SampleSummary estimate_proportion(std::uint64_t samples, std::uint64_t seed, unsigned threads, Trial&& trial) {
  if (samples == 0) throw ValidationError("samples must be at least 1");
  const auto per_block = run_blocks(samples, seed, threads, [&](SplitMix64& rng, std::uint64_t first, std::uint64_t last) {
    std::uint64_t hits = 0;
    for (std::uint64_t i = first; i < last; ++i) hits += trial(rng) ? 1 : 0;
    return hits;
  });
  std::uint64_t hits = 0;
  for (auto h : per_block) hits += h;
  SampleSummary s;
  s.samples = samples;
  s.seed = seed;
  s.estimate = static_cast<double>(hits) / static_cast<double>(samples);
  s.std_error = proportion_std_error(s.estimate, samples);
  s.extra["hits"] = static_cast<double>(hits);
  return s;
}

}  // namespace symchar
