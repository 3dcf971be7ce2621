#pragma once

// Entry statistics of S_n character tables under the uniform measure on
// (character, class) pairs, reported next to the class-size-weighted
// vanishing probability P_n.

#include <cstdint>
#include <optional>
#include <vector>

#include "symchar/characters.hpp"
#include "symchar/exact.hpp"
#include "symchar/theorem_stats.hpp"

namespace symchar {

struct TableStats {
  int n = 0;
  BigInt p_n;
  std::uint64_t zero_entries = 0;
  std::uint64_t positive_entries = 0;
  std::uint64_t negative_entries = 0;
  Rational zero_density;              // zeros / p_n^2
  std::optional<Rational> sign_ratio;  // positives / negatives; nullopt when there are no negatives
  Rational class_weighted_pzero;      // P_n, for contrast
};

inline TableStats table_stats(const CharacterTable& table) {
  TableStats s;
  s.n = table.n;
  s.p_n = table.size();
  for (const auto& v : table.values) {
    if (v == 0) ++s.zero_entries;
    else if (v > 0) ++s.positive_entries;
    else ++s.negative_entries;
  }
  s.zero_density = Rational(BigInt(s.zero_entries), BigInt(s.p_n * s.p_n));
  if (s.negative_entries > 0) s.sign_ratio = Rational(BigInt(s.positive_entries), BigInt(s.negative_entries));
  s.class_weighted_pzero = exact_pzero(table);
  return s;
}

inline TableStats table_stats(int n, const TableOptions& opts = {}) { return table_stats(character_table(n, opts)); }

/// One TableStats per n in [n_min, n_max]; empty when n_min > n_max.
inline std::vector<TableStats> stats_series(int n_min, int n_max, const TableOptions& opts = {}) {
  std::vector<TableStats> out;
  if (n_min > n_max) return out;
  if (n_min < 1) throw ValidationError("stats_series: n_min must be positive");
  require_table_within_cap(n_max, opts.cap);
  for (int n = n_min; n <= n_max; ++n) out.push_back(table_stats(n, opts));
  return out;
}

}  // namespace symchar
