#pragma once

// Irreducible characters of the symmetric group via the Murnaghan-Nakayama
// rule. Shapes are manipulated through their beta-sets (first-column hook
// lengths): removing a border strip of size k is moving one bead from b to
// b - k onto a free position, with sign (-1)^(beads jumped over).

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "symchar/detail/parallel.hpp"
#include "symchar/errors.hpp"
#include "symchar/exact.hpp"
#include "symchar/partitions.hpp"

namespace symchar {

using CharacterValue = BigInt;

/// Calls fn(residual_parts, sign) for every border strip of size k in the
/// shape `parts`, scanning strips by topmost row ascending. `residual_parts`
/// is only valid during the callback.
template <class Fn>
void for_each_border_strip(std::span<const int> parts, int k, Fn&& fn) {
  const auto len = static_cast<int>(parts.size());
  std::vector<int> beta(parts.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + len - 1 - i;
  std::vector<int> moved(parts.size());
  for (int i = 0; i < len; ++i) {
    const int target = beta[static_cast<std::size_t>(i)] - k;
    if (target < 0) continue;
    int j = i + 1;
    while (j < len && beta[static_cast<std::size_t>(j)] > target) ++j;
    if (j < len && beta[static_cast<std::size_t>(j)] == target) continue;
    const int jumped = j - i - 1;
    // New beta-set: drop bead i, insert target just before index j.
    std::size_t w = 0;
    for (int t = 0; t < len; ++t) {
      if (t == i) continue;
      if (t == j) moved[w++] = target;
      moved[w++] = beta[static_cast<std::size_t>(t)];
    }
    if (j == len) moved[w++] = target;
    std::size_t used = 0;
    for (int t = 0; t < len; ++t) {
      const int part = moved[static_cast<std::size_t>(t)] - (len - 1 - t);
      if (part == 0) break;
      moved[static_cast<std::size_t>(t)] = part;
      ++used;
    }
    fn(std::span<const int>(moved.data(), used), (jumped % 2 == 0) ? 1 : -1);
  }
}

namespace detail {

inline void append_key(std::string& key, std::span<const int> parts) {
  for (int p : parts) {
    const auto u = static_cast<std::uint32_t>(p);
    key.append(reinterpret_cast<const char*>(&u), sizeof u);
  }
}

// Single-value evaluator; the memo lives for one mn_value call.
class MnEvaluator {
 public:
  explicit MnEvaluator(std::span<const int> mu) : mu_(mu) {}

  BigInt eval(std::span<const int> shape, std::size_t idx) {
    if (idx == mu_.size()) return 1;
    std::string key;
    key.reserve(shape.size() * 4 + 4);
    append_key(key, shape);
    const auto tag = static_cast<std::uint32_t>(idx);
    key.append(reinterpret_cast<const char*>(&tag), sizeof tag);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    BigInt total = 0;
    std::vector<std::pair<std::vector<int>, int>> children;
    for_each_border_strip(shape, mu_[idx], [&](std::span<const int> rest, int sign) {
      children.emplace_back(std::vector<int>(rest.begin(), rest.end()), sign);
    });
    for (const auto& [rest, sign] : children) {
      BigInt v = eval(rest, idx + 1);
      if (sign > 0) total += v; else total -= v;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::span<const int> mu_;
  std::unordered_map<std::string, BigInt> memo_;
};

}  // namespace detail

/// chi^lambda(mu). Parts of mu are consumed largest first.
inline CharacterValue mn_value(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n()) {
    throw ValidationError("mn_value: |lambda| = " + std::to_string(lambda.n()) + " but |mu| = " + std::to_string(mu.n()));
  }
  detail::MnEvaluator ev(mu.parts());
  return ev.eval(lambda.parts(), 0);
}

/// Hook length formula: n! / prod(hooks).
inline BigInt dimension(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  BigInt hooks = 1;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      hooks *= lambda[i] - j + conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
    }
  }
  const BigInt nf = factorial(static_cast<unsigned>(lambda.n()));
  if (nf % hooks != 0) throw InternalError("hook product does not divide n! for " + lambda.to_string());
  return nf / hooks;
}

/// Rows are characters lambda, columns classes mu, both in canonical order.
struct CharacterTable {
  int n = 0;
  std::vector<Partition> labels;
  std::vector<BigInt> values;  // row-major, labels.size()^2

  std::size_t size() const { return labels.size(); }
  const BigInt& at(std::size_t row, std::size_t col) const { return values[row * labels.size() + col]; }
};

struct TableOptions {
  unsigned threads = 1;
  std::uint64_t cap = kDefaultEnumerationCap;  // bound on p_n^2 table entries
};

inline void require_table_within_cap(int n, std::uint64_t cap) {
  const BigInt max_rows = boost::multiprecision::sqrt(BigInt(cap));
  if (!partition_count_at_most(n, max_rows)) {
    std::string need;
    if (n <= 2000) {
      const BigInt p = partition_count(n);
      need = BigInt(p * p).str() + " entries (p_n = " + p.str() + ")";
    } else {
      char buf[64];
      const double p = partition_count_estimate(n);
      std::snprintf(buf, sizeof buf, "~%.3e entries (p_n ~%.3e)", p * p, p);
      need = buf;
    }
    throw CapExceeded("character table of S_" + std::to_string(n) + " needs p_n^2 = " + need + ", above the cap of " +
                      std::to_string(cap));
  }
}

/// Full character table of S_n.
///
/// Bulk mode: for every suffix nu of a class label (mu with its largest
/// parts removed), the whole vector chi^lambda(nu), lambda |- |nu|, is built
/// once from the vectors of shorter suffixes. Suffixes of equal size are
/// independent and may be built concurrently; each slot is written once.
inline CharacterTable character_table(int n, const TableOptions& opts = {}) {
  if (n < 1) throw ValidationError("character_table: n must be positive");
  require_table_within_cap(n, opts.cap);

  std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) by_size[static_cast<std::size_t>(m)] = enumerate_partitions(m, opts.cap);
  const BoundedPartitionCounts<std::uint64_t> counts(n);

  // Slot per distinct suffix; levels[m] lists the suffixes of size m.
  std::map<std::vector<int>, std::size_t> slot_of;
  std::vector<std::vector<int>> suffixes;
  std::vector<std::vector<std::size_t>> levels(static_cast<std::size_t>(n) + 1);
  auto intern = [&](std::vector<int> suffix, int size) {
    auto [it, inserted] = slot_of.emplace(suffix, suffixes.size());
    if (inserted) {
      suffixes.push_back(std::move(suffix));
      levels[static_cast<std::size_t>(size)].push_back(it->second);
    }
  };
  for (const Partition& mu : by_size[static_cast<std::size_t>(n)]) {
    int size = n;
    for (std::size_t i = 0; i <= mu.length(); ++i) {
      intern(std::vector<int>(mu.vec().begin() + static_cast<std::ptrdiff_t>(i), mu.vec().end()), size);
      if (i < mu.length()) size -= mu[i];
    }
  }

  std::vector<std::vector<BigInt>> vectors(suffixes.size());
  for (int m = 0; m <= n; ++m) {
    const auto& level = levels[static_cast<std::size_t>(m)];
    const auto& shapes = by_size[static_cast<std::size_t>(m)];
    detail::parallel_for(level.size(), opts.threads, [&](std::size_t li) {
      const std::size_t slot = level[li];
      const auto& nu = suffixes[slot];
      std::vector<BigInt> out(shapes.size());
      if (nu.empty()) {
        out[0] = 1;
      } else {
        const std::vector<int> tail(nu.begin() + 1, nu.end());
        const auto& prev = vectors[slot_of.at(tail)];
        for (std::size_t r = 0; r < shapes.size(); ++r) {
          BigInt acc = 0;
          for_each_border_strip(shapes[r].parts(), nu.front(), [&](std::span<const int> rest, int sign) {
            const BigInt& v = prev[static_cast<std::size_t>(counts.rank(rest))];
            if (sign > 0) acc += v; else acc -= v;
          });
          out[r] = std::move(acc);
        }
      }
      vectors[slot] = std::move(out);
    });
  }

  CharacterTable table;
  table.n = n;
  table.labels = by_size[static_cast<std::size_t>(n)];
  const std::size_t p = table.labels.size();
  table.values.resize(p * p);
  for (std::size_t c = 0; c < p; ++c) {
    const auto& column = vectors[slot_of.at(table.labels[c].vec())];
    for (std::size_t r = 0; r < p; ++r) table.values[r * p + c] = column[r];
  }
  return table;
}

}  // namespace symchar
