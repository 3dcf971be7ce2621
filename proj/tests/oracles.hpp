#pragma once

// Brute-force reference computations for the unit and acceptance tests.
// Nothing here calls into the Murnaghan-Nakayama or hook-length code.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "symchar/exact.hpp"
#include "symchar/partitions.hpp"

namespace oracle {

using Perm = std::vector<int>;

inline std::vector<Perm> all_permutations(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<int> cycle_lengths(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  std::vector<int> out;
  for (std::size_t s = 0; s < p.size(); ++s) {
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(p[x])) {
      seen[x] = 1;
      ++len;
    }
    if (len) out.push_back(len);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// +1 or -1 from the inversion count.
inline int parity_sign(const Perm& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  return inv % 2 ? -1 : 1;
}

inline int fixed_points(const Perm& p) {
  int f = 0;
  for (std::size_t i = 0; i < p.size(); ++i) f += p[i] == static_cast<int>(i);
  return f;
}

/// A permutation with the given cycle type: consecutive blocks rotated.
inline Perm with_cycle_type(const std::vector<int>& parts) {
  Perm p;
  int start = 0;
  for (int len : parts) {
    for (int i = 0; i < len; ++i) p.push_back(start + (i + 1) % len);
    start += len;
  }
  return p;
}

inline Perm compose(const Perm& a, const Perm& b) {  // a after b
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
  return c;
}

/// Number of permutations commuting with g.
inline long long centralizer_by_search(const Perm& g) {
  long long count = 0;
  for (const auto& h : all_permutations(static_cast<int>(g.size()))) count += compose(g, h) == compose(h, g);
  return count;
}

/// Partitions of n with parts <= max, generated recursively, descending lex.
inline void partitions_rec(int n, int max, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(n - k, k, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

/// Standard Young tableaux of a shape, by removing the cell holding the
/// largest entry (always a corner).
inline symchar::BigInt count_syt(std::vector<int> shape) {
  static std::map<std::vector<int>, symchar::BigInt> memo;
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  if (auto it = memo.find(shape); it != memo.end()) return it->second;
  symchar::BigInt total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const bool corner = i + 1 == shape.size() || shape[i + 1] < shape[i];
    if (!corner) continue;
    auto smaller = shape;
    --smaller[i];
    total += count_syt(smaller);
  }
  memo[shape] = total;
  return total;
}

/// Character table of S_n for n <= 3 built from explicit representations:
/// trivial, sign (parity), and for n = 3 the standard representation
/// (fixed points minus one). Rows/columns in canonical order.
inline std::vector<std::vector<long long>> small_table(int n) {
  const auto classes = partitions(n);
  std::vector<std::function<long long(const Perm&)>> chars;
  chars.push_back([](const Perm&) { return 1LL; });
  if (n == 3) chars.push_back([](const Perm& p) { return static_cast<long long>(fixed_points(p) - 1); });
  if (n >= 2) chars.push_back([](const Perm& p) { return static_cast<long long>(parity_sign(p)); });
  std::vector<std::vector<long long>> t;
  for (const auto& chi : chars) {
    std::vector<long long> row;
    for (const auto& mu : classes) row.push_back(chi(with_cycle_type(mu)));
    t.push_back(row);
  }
  return t;
}

/// P_n by brute force over every (character, group element) pair.
inline symchar::Rational pzero_by_elements(int n) {
  const auto t = small_table(n);
  const auto classes = partitions(n);
  long long zeros = 0, total = 0;
  for (std::size_t r = 0; r < t.size(); ++r) {
    for (const auto& g : all_permutations(n)) {
      const auto type = cycle_lengths(g);
      const auto c = static_cast<std::size_t>(std::find(classes.begin(), classes.end(), type) - classes.begin());
      zeros += t[r][c] == 0;
      ++total;
    }
  }
  return symchar::Rational(symchar::BigInt(zeros), symchar::BigInt(total));
}

/// Adaptive Simpson quadrature.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double eps, int depth = 50) {
  auto simpson = [&](double lo, double hi) { return (hi - lo) / 6.0 * (f(lo) + 4.0 * f(0.5 * (lo + hi)) + f(hi)); };
  std::function<double(double, double, double, double, int)> rec = [&](double lo, double hi, double whole, double tol, int d) {
    const double mid = 0.5 * (lo + hi);
    const double left = simpson(lo, mid), right = simpson(mid, hi);
    if (d <= 0 || std::abs(left + right - whole) <= 15.0 * tol) return left + right + (left + right - whole) / 15.0;
    return rec(lo, mid, left, tol / 2, d - 1) + rec(mid, hi, right, tol / 2, d - 1);
  };
  return rec(a, b, simpson(a, b), eps, depth);
}

}  // namespace oracle
