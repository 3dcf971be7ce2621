#pragma once

// The vanishing-probability bound for an arbitrary finite group given by its
// class sizes (and optionally an exact rational character table):
//
//   1 >= P(G) >= Q(G, Omega) - R(G, Omega)
//
// Q is the fraction of G covered by the classes in Omega, R the fraction of
// classes in Omega. The bound is maximal for the larger-than-average classes.

#include <nlohmann/json.hpp>

#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symchar/characters.hpp"
#include "symchar/errors.hpp"
#include "symchar/exact.hpp"
#include "symchar/partitions.hpp"
#include "symchar/sampling.hpp"

namespace symchar {

struct GroupClass {
  std::string name;
  BigInt size;
};

struct ClassData {
  std::string group;
  BigInt order;
  std::vector<GroupClass> classes;
  std::optional<std::vector<std::vector<Rational>>> table;  // rows = characters

  std::size_t num_classes() const { return classes.size(); }
};

/// Checks every ClassData invariant; throws ValidationError naming the culprit.
/// Above this many classes only the column norms are checked.
inline constexpr std::size_t kMaxCrossCheckedClasses = 256;

inline void validate(const ClassData& data) {
  if (data.order < 1) throw ValidationError("group order must be positive");
  if (data.classes.empty()) throw ValidationError("at least one class is required");
  BigInt sum = 0;
  for (const auto& c : data.classes) {
    if (c.size < 1) throw ValidationError("class '" + c.name + "' has non-positive size");
    if (data.order % c.size != 0) {
      throw ValidationError("class '" + c.name + "' size " + c.size.str() + " does not divide the group order " + data.order.str());
    }
    sum += c.size;
  }
  if (sum != data.order) {
    throw ValidationError("class sizes sum to " + sum.str() + " but the group order is " + data.order.str());
  }
  if (!data.table) return;
  const std::size_t k = data.num_classes();
  const auto& t = *data.table;
  if (t.size() != k) throw ValidationError("character table must have one row per class (" + std::to_string(k) + ")");
  for (std::size_t r = 0; r < k; ++r) {
    if (t[r].size() != k) throw ValidationError("character table row " + std::to_string(r) + " has the wrong length");
  }
  // Rational entries make every character real-valued, so the second
  // orthogonality relation applies column by column.
  for (std::size_t c = 0; c < k; ++c) {
    Rational sq = 0;
    for (std::size_t r = 0; r < k; ++r) sq += t[r][c] * t[r][c];
    if (sq != Rational(data.order, data.classes[c].size)) {
      throw ValidationError("column orthogonality fails for class '" + data.classes[c].name + "': sum of squares " +
                            to_fraction_string(sq) + " != |G|/|K| = " + to_fraction_string(Rational(data.order, data.classes[c].size)));
    }
  }
  // Distinct columns are orthogonal too; cubic in k, so only for modest tables.
  if (k > kMaxCrossCheckedClasses) return;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      Rational dot = 0;
      for (std::size_t r = 0; r < k; ++r) dot += t[r][a] * t[r][b];
      if (dot != 0) {
        throw ValidationError("column orthogonality fails between classes '" + data.classes[a].name + "' and '" +
                              data.classes[b].name + "': inner product " + to_fraction_string(dot));
      }
    }
  }
}

namespace detail {

inline BigInt json_integer(const nlohmann::json& j, const std::string& what) {
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
  throw ValidationError(what + " must be a decimal string or an integer");
}

inline Rational json_entry(const nlohmann::json& j, std::size_t row, std::size_t col) {
  const std::string where = "table entry [" + std::to_string(row) + "][" + std::to_string(col) + "]";
  try {
    if (j.is_object()) {
      if (!j.contains("num") || !j.contains("den")) throw ValidationError("needs both 'num' and 'den'");
      const BigInt den = json_integer(j.at("den"), "den");
      if (den == 0) throw ValidationError("zero denominator");
      return Rational(json_integer(j.at("num"), "num"), den);
    }
    return Rational(json_integer(j, "value"));
  } catch (const ValidationError& e) {
    throw ValidationError(where + ": only integer or rational entries are supported (" + e.what() + ")");
  }
}

inline nlohmann::json rational_json(const Rational& q) {
  if (denominator_of(q) == 1) return numerator_of(q).str();
  return {{"num", numerator_of(q).str()}, {"den", denominator_of(q).str()}};
}

}  // namespace detail

inline ClassData class_data_from_json(const nlohmann::json& j) {
  ClassData data;
  try {
    if (!j.is_object()) throw ValidationError("class data must be a JSON object");
    data.group = j.value("group", std::string{});
    if (!j.contains("order")) throw ValidationError("missing 'order'");
    data.order = detail::json_integer(j.at("order"), "order");
    if (!j.contains("classes") || !j.at("classes").is_array()) throw ValidationError("missing 'classes' array");
    for (const auto& c : j.at("classes")) {
      if (!c.is_object() || !c.contains("size")) throw ValidationError("each class needs a 'size'");
      GroupClass gc;
      gc.name = c.value("name", "class" + std::to_string(data.classes.size()));
      gc.size = detail::json_integer(c.at("size"), "size of class '" + gc.name + "'");
      data.classes.push_back(std::move(gc));
    }
    if (j.contains("table") && !j.at("table").is_null()) {
      const auto& rows = j.at("table");
      if (!rows.is_array()) throw ValidationError("'table' must be an array of rows");
      std::vector<std::vector<Rational>> table;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!rows[r].is_array()) throw ValidationError("table row " + std::to_string(r) + " is not an array");
        std::vector<Rational> row;
        for (std::size_t c = 0; c < rows[r].size(); ++c) row.push_back(detail::json_entry(rows[r][c], r, c));
        table.push_back(std::move(row));
      }
      data.table = std::move(table);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("class data: ") + e.what());
  }
  validate(data);
  return data;
}

/// Reads and validates ClassData JSON.
inline ClassData load_class_data(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("class data is not valid JSON: ") + e.what());
  }
  return class_data_from_json(j);
}

inline nlohmann::json to_json(const ClassData& data) {
  nlohmann::json j;
  j["group"] = data.group;
  j["order"] = data.order.str();
  j["classes"] = nlohmann::json::array();
  for (const auto& c : data.classes) j["classes"].push_back({{"name", c.name}, {"size", c.size.str()}});
  if (data.table) {
    j["table"] = nlohmann::json::array();
    for (const auto& row : *data.table) {
      auto jr = nlohmann::json::array();
      for (const auto& v : row) jr.push_back(detail::rational_json(v));
      j["table"].push_back(std::move(jr));
    }
  }
  return j;
}

/// S_n as generic class data: classes named by cycle type, full character table.
inline ClassData symmetric_group_class_data(int n, const TableOptions& opts = {}) {
  const CharacterTable table = character_table(n, opts);
  ClassData data;
  data.group = "S_" + std::to_string(n);
  data.order = factorial(static_cast<unsigned>(n));
  for (const auto& mu : table.labels) data.classes.push_back({mu.to_string(), class_size(mu)});
  std::vector<std::vector<Rational>> rows(table.size());
  for (std::size_t r = 0; r < table.size(); ++r) {
    for (std::size_t c = 0; c < table.size(); ++c) rows[r].emplace_back(table.at(r, c));
  }
  data.table = std::move(rows);
  return data;
}

/// Classes K with k |K| >= |G|, i.e. |C_G(g)| <= number of classes.
inline std::vector<std::size_t> default_omega(const ClassData& data) {
  std::vector<std::size_t> out;
  const BigInt k = data.num_classes();
  for (std::size_t i = 0; i < data.classes.size(); ++i) {
    if (k * data.classes[i].size >= data.order) out.push_back(i);
  }
  return out;
}

struct PropositionReport {
  Rational q;
  Rational r;
  Rational lower_bound;
  std::optional<Rational> exact_p;
  std::vector<std::string> omega_names;

  bool inequality_holds() const { return !exact_p || (*exact_p <= 1 && *exact_p >= lower_bound); }
};

/// P(G) = sum_K |K| #{chi : chi(K) = 0} / (k |G|).
inline Rational exact_p_of_group(const ClassData& data) {
  if (!data.table) throw ValidationError("exact P(G) needs a character table");
  const std::size_t k = data.num_classes();
  BigInt weighted = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::uint64_t zeros = 0;
    for (std::size_t r = 0; r < k; ++r) zeros += (*data.table)[r][c] == 0 ? 1 : 0;
    weighted += data.classes[c].size * zeros;
  }
  return Rational(weighted, BigInt(k) * data.order);
}

inline PropositionReport proposition_bound(const ClassData& data, std::span<const std::size_t> omega) {
  std::set<std::size_t> seen;
  PropositionReport rep;
  BigInt covered = 0;
  for (std::size_t i : omega) {
    if (i >= data.num_classes()) throw ValidationError("Omega index " + std::to_string(i) + " is out of range");
    if (!seen.insert(i).second) throw ValidationError("Omega index " + std::to_string(i) + " is repeated");
    covered += data.classes[i].size;
    rep.omega_names.push_back(data.classes[i].name);
  }
  rep.q = Rational(covered, data.order);
  rep.r = Rational(BigInt(omega.size()), BigInt(data.num_classes()));
  rep.lower_bound = rep.q - rep.r;
  if (data.table) rep.exact_p = exact_p_of_group(data);
  return rep;
}

struct OmegaCheck {
  Rational best_value;     // max of Q - R over the subsets examined
  Rational default_value;  // Q - R for default_omega
  bool default_is_max = false;
  bool exhaustive = false;
  std::uint64_t subsets_checked = 0;
  std::vector<std::size_t> best_subset;
};

inline constexpr std::size_t kMaxExhaustiveClasses = 20;

/// Compares default_omega against every subset of classes (k <= 20), or
/// against `sampled_subsets` seeded random subsets otherwise.
inline OmegaCheck best_omega_check(const ClassData& data, std::uint64_t sampled_subsets = 1u << 16,
                                   std::uint64_t seed = kDefaultSeed) {
  const std::size_t k = data.num_classes();
  // Q - R = sum_{K in Omega} (k |K| - |G|) / (k |G|): work with the integer numerators.
  std::vector<BigInt> weight(k);
  for (std::size_t i = 0; i < k; ++i) weight[i] = BigInt(k) * data.classes[i].size - data.order;
  const BigInt den = BigInt(k) * data.order;

  OmegaCheck out;
  BigInt default_sum = 0;
  for (std::size_t i : default_omega(data)) default_sum += weight[i];
  out.default_value = Rational(default_sum, den);

  BigInt best = 0;  // empty subset
  std::uint64_t best_mask = 0;
  if (k <= kMaxExhaustiveClasses) {
    out.exhaustive = true;
    const std::uint64_t total = std::uint64_t{1} << k;
    BigInt cur = 0;
    std::uint64_t gray = 0;
    for (std::uint64_t i = 1; i < total; ++i) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(i));
      gray ^= std::uint64_t{1} << bit;
      if (gray & (std::uint64_t{1} << bit)) cur += weight[bit]; else cur -= weight[bit];
      if (cur > best) {
        best = cur;
        best_mask = gray;
      }
    }
    out.subsets_checked = total;
    for (std::size_t i = 0; i < k; ++i) {
      if (best_mask & (std::uint64_t{1} << i)) out.best_subset.push_back(i);
    }
  } else {
    SplitMix64 rng(seed);
    std::vector<std::size_t> best_set;
    for (std::uint64_t s = 0; s < sampled_subsets; ++s) {
      BigInt cur = 0;
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < k; ++i) {
        if (rng() & 1u) {
          cur += weight[i];
          subset.push_back(i);
        }
      }
      if (cur > best) {
        best = cur;
        best_set = std::move(subset);
      }
    }
    out.subsets_checked = sampled_subsets + 1;
    out.best_subset = std::move(best_set);
  }
  if (default_sum > best) {
    best = default_sum;
    out.best_subset = default_omega(data);
  }
  out.best_value = Rational(best, den);
  out.default_is_max = default_sum == best;
  return out;
}

}  // namespace symchar
