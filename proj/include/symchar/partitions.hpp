#pragma once

// Integer partitions: the shared label set for conjugacy classes (cycle
// types) and irreducible characters of the symmetric group.
//
// Canonical order everywhere is descending lexicographic on the part
// sequence, so for n = 4 it is (4), (3,1), (2,2), (2,1,1), (1,1,1,1).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "symchar/errors.hpp"
#include "symchar/exact.hpp"

namespace symchar {

/// Default guard on full enumerations: refuse when p_n exceeds this.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

class Partition {
 public:
  Partition() = default;

  /// Validates that parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw ValidationError("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw ValidationError("partition parts must be weakly decreasing");
      n_ += parts_[i];
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts arbitrary positive parts into a partition.
  static Partition from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  /// Parses the dash-joined form used in CSV headers, e.g. "3-1-1".
  /// The empty string is the empty partition.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return Partition();
    std::size_t start = 0;
    while (true) {
      const std::size_t dash = text.find('-', start);
      const std::string_view piece = text.substr(start, dash == std::string_view::npos ? text.npos : dash - start);
      if (piece.empty() || piece.size() > 9 ||
          !std::all_of(piece.begin(), piece.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ValidationError("malformed partition '" + std::string(text) + "'");
      }
      parts.push_back(std::stoi(std::string(piece)));
      if (dash == std::string_view::npos) break;
      start = dash + 1;
    }
    return Partition(std::move(parts));
  }

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int n() const { return n_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Multiplicity of each part size: result[i] = number of parts equal to i.
  std::vector<int> multiplicities() const {
    std::vector<int> m(static_cast<std::size_t>(largest()) + 1, 0);
    for (int p : parts_) ++m[static_cast<std::size_t>(p)];
    return m;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += '-';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  // Plain lexicographic comparison, for use as a map key. Canonical table
  // order is the reverse of this; see canonical_before().
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// True when `a` precedes `b` in the canonical (descending lexicographic) order.
inline bool canonical_before(const Partition& a, const Partition& b) { return a.vec() > b.vec(); }

/// p_n by Euler's pentagonal-number recurrence.
inline BigInt partition_count(int n) {
  if (n < 0) throw ValidationError("partition_count: n must be nonnegative");
  std::vector<BigInt> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const int g2 = k * (3 * k + 1) / 2;
      BigInt term = p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) term += p[static_cast<std::size_t>(m - g2)];
      if (k % 2 == 1) acc += term; else acc -= term;
    }
    p[static_cast<std::size_t>(m)] = acc;
  }
  return p[static_cast<std::size_t>(n)];
}

/// Counts of partitions of m with every part <= k, for 0 <= k, m <= max_n.
/// Backs ranking and unranking. `Int` is either a fixed-width unsigned
/// type (overflow raises CapExceeded) or BigInt.
template <class Int>
class BoundedPartitionCounts {
 public:
  explicit BoundedPartitionCounts(int max_n) : max_n_(max_n) {
    if (max_n < 0) throw ValidationError("BoundedPartitionCounts: n must be nonnegative");
    const auto w = static_cast<std::size_t>(max_n) + 1;
    table_.assign(w * w, Int(0));
    for (std::size_t k = 0; k < w; ++k) at(0, k) = 1;
    for (std::size_t m = 1; m < w; ++m) {
      for (std::size_t k = 1; k < w; ++k) {
        if (k > m) {
          at(m, k) = at(m, m);
          continue;
        }
        const Int& a = at(m, k - 1);
        const Int& b = at(m - k, k);
        if constexpr (std::is_integral_v<Int>) {
          if (a > std::numeric_limits<Int>::max() - b)
            throw CapExceeded("partition counts overflow fixed-width integers at n=" + std::to_string(m));
        }
        at(m, k) = a + b;
      }
    }
  }

  int max_n() const { return max_n_; }

  /// Number of partitions of m with all parts <= k.
  const Int& count(int m, int k) const {
    k = std::min(k, m);
    return table_[index(static_cast<std::size_t>(m), static_cast<std::size_t>(std::max(k, 0)))];
  }
  const Int& total(int m) const { return count(m, m); }

  /// Position of `parts` (a partition of sum(parts)) in canonical order.
  Int rank(std::span<const int> parts) const {
    int m = std::accumulate(parts.begin(), parts.end(), 0);
    check_size(m);
    Int r = 0;
    int bound = m;
    for (int p : parts) {
      r += count(m, bound) - count(m, p);
      m -= p;
      bound = p;
    }
    return r;
  }

  Partition unrank(int m, Int r) const {
    check_size(m);
    if (m < 0 || !(r < total(m))) throw ValidationError("unrank: rank out of bounds");
    std::vector<int> parts;
    int bound = m;
    while (m > 0) {
      for (int p = std::min(bound, m); p >= 1; --p) {
        const Int& with_first_p = count(m - p, p);
        if (r < with_first_p) {
          parts.push_back(p);
          m -= p;
          bound = p;
          break;
        }
        r -= with_first_p;
      }
    }
    return Partition(std::move(parts));
  }

 private:
  std::size_t index(std::size_t m, std::size_t k) const { return m * (static_cast<std::size_t>(max_n_) + 1) + k; }
  Int& at(std::size_t m, std::size_t k) { return table_[index(m, k)]; }
  void check_size(int m) const {
    if (m > max_n_) throw ValidationError("partition size exceeds counting table");
  }

  int max_n_;
  std::vector<Int> table_;
};

/// True when p_n <= limit. Stops the recurrence as soon as the running
/// count passes the limit, so huge n are rejected cheaply.
inline bool partition_count_at_most(int n, const BigInt& limit) {
  if (n < 0) throw ValidationError("partition_count: n must be nonnegative");
  std::vector<BigInt> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const int g2 = k * (3 * k + 1) / 2;
      BigInt term = p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) term += p[static_cast<std::size_t>(m - g2)];
      if (k % 2 == 1) acc += term; else acc -= term;
    }
    if (acc > limit) return false;
    p[static_cast<std::size_t>(m)] = acc;
  }
  return true;
}

/// Hardy-Ramanujan estimate of p_n, for error messages about huge n.
inline double partition_count_estimate(int n) {
  if (n < 1) return 1.0;
  const double dn = n;
  return std::exp(std::numbers::pi * std::sqrt(2.0 * dn / 3.0)) / (4.0 * dn * std::sqrt(3.0));
}

inline std::string describe_count(int n) {
  if (n <= 2000) return partition_count(n).str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "~%.3e", partition_count_estimate(n));
  return buf;
}

inline void require_within_cap(int n, std::uint64_t cap) {
  if (!partition_count_at_most(n, BigInt(cap))) {
    throw CapExceeded("enumerating partitions of " + std::to_string(n) + " needs p_n = " + describe_count(n) +
                      " entries, above the cap of " + std::to_string(cap));
  }
}

/// All partitions of n in canonical order.
inline std::vector<Partition> enumerate_partitions(int n, std::uint64_t cap = kDefaultEnumerationCap) {
  if (n < 0) throw ValidationError("enumerate_partitions: n must be nonnegative");
  require_within_cap(n, cap);
  std::vector<Partition> out;
  out.reserve(partition_count(n).convert_to<std::size_t>());
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Successor in descending lexicographic order: find the rightmost part > 1,
  // decrement it, and refill the tail greedily with that bound.
  std::vector<int> cur{n};
  while (true) {
    out.emplace_back(cur);
    std::size_t ones = 0;
    while (!cur.empty() && cur.back() == 1) {
      cur.pop_back();
      ++ones;
    }
    if (cur.empty()) break;
    const int bound = --cur.back();
    int rest = static_cast<int>(ones) + 1;
    while (rest > 0) {
      const int piece = std::min(bound, rest);
      cur.push_back(piece);
      rest -= piece;
    }
  }
  return out;
}

/// z_lambda = prod_i i^{m_i} m_i!, the centralizer order of a permutation of cycle type lambda.
inline BigInt centralizer_order(const Partition& lambda) {
  BigInt z = 1;
  const auto mult = lambda.multiplicities();
  for (std::size_t i = 1; i < mult.size(); ++i) {
    for (int j = 1; j <= mult[i]; ++j) z *= BigInt(i) * j;
  }
  return z;
}

/// |K_lambda| = n!/z_lambda.
inline BigInt class_size(const Partition& lambda) {
  const BigInt nf = factorial(static_cast<unsigned>(lambda.n()));
  const BigInt z = centralizer_order(lambda);
  if (nf % z != 0) throw InternalError("centralizer order does not divide n! for " + lambda.to_string());
  return nf / z;
}

/// Transposed Young diagram.
inline Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.largest()), 0);
  for (int p : lambda.parts()) {
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

struct PartitionIndex {
  int n = 0;
  BigInt rank = 0;
  friend bool operator==(const PartitionIndex&, const PartitionIndex&) = default;
};

inline PartitionIndex rank(const Partition& lambda) {
  return {lambda.n(), BoundedPartitionCounts<BigInt>(lambda.n()).rank(lambda.parts())};
}

inline Partition unrank(const PartitionIndex& idx) {
  if (idx.n < 0 || idx.rank < 0) throw ValidationError("unrank: index out of bounds");
  return BoundedPartitionCounts<BigInt>(idx.n).unrank(idx.n, idx.rank);
}

}  // namespace symchar
