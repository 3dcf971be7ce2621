#pragma once

// Machine-readable renderings: CSV and JSON. Integers and rationals are
// always emitted as exact decimal strings.

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "symchar/characters.hpp"
#include "symchar/exact.hpp"
#include "symchar/generic_group.hpp"
#include "symchar/sampling.hpp"
#include "symchar/table_stats.hpp"
#include "symchar/theorem_stats.hpp"

namespace symchar {

/// {"num": "...", "den": "..."}
inline nlohmann::json fraction_json(const Rational& q) {
  return {{"num", numerator_of(q).str()}, {"den", denominator_of(q).str()}};
}

/// Header row "chi,<class>,<class>,..."; each following row starts with the character label.
inline void write_csv(std::ostream& out, const CharacterTable& table) {
  out << "chi";
  for (const auto& mu : table.labels) out << ',' << mu.to_string();
  out << '\n';
  for (std::size_t r = 0; r < table.size(); ++r) {
    out << table.labels[r].to_string();
    for (std::size_t c = 0; c < table.size(); ++c) out << ',' << table.at(r, c).str();
    out << '\n';
  }
}

inline nlohmann::json to_json(const CharacterTable& table) {
  nlohmann::json j;
  j["n"] = table.n;
  auto labels = nlohmann::json::array();
  for (const auto& l : table.labels) labels.push_back(l.to_string());
  j["classes"] = labels;
  j["characters"] = labels;
  auto rows = nlohmann::json::array();
  for (std::size_t r = 0; r < table.size(); ++r) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 0; c < table.size(); ++c) row.push_back(table.at(r, c).str());
    rows.push_back(std::move(row));
  }
  j["values"] = std::move(rows);
  return j;
}

inline nlohmann::json to_json(const BoundReport& rep) {
  nlohmann::json j;
  j["n"] = rep.n;
  j["p_n"] = rep.p_n.str();
  j["omega_count"] = rep.omega_count.str();
  j["q_n"] = fraction_json(rep.q_n);
  j["r_n"] = fraction_json(rep.r_n);
  j["lower_bound"] = fraction_json(rep.lower_bound);
  j["exact_p"] = rep.exact_p ? fraction_json(*rep.exact_p) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json to_json(const SampleSummary& s) {
  nlohmann::json j;
  j["estimate"] = s.estimate;
  j["samples"] = s.samples;
  j["std_error"] = s.std_error;
  j["seed"] = s.seed;
  j["extra"] = s.extra;
  return j;
}

inline nlohmann::json to_json(const GoncharovSample& g) {
  nlohmann::json j;
  j["n"] = g.n;
  j["sample_count"] = g.sample_count;
  j["seed"] = g.seed;
  j["ks_distance"] = g.ks_distance;
  j["mean_cycles"] = g.mean_cycles;
  return j;
}

inline nlohmann::json to_json(const TableStats& s) {
  nlohmann::json j;
  j["n"] = s.n;
  j["p_n"] = s.p_n.str();
  j["zeros"] = s.zero_entries;
  j["positives"] = s.positive_entries;
  j["negatives"] = s.negative_entries;
  j["zero_density"] = fraction_json(s.zero_density);
  j["sign_ratio"] = s.sign_ratio ? fraction_json(*s.sign_ratio) : nlohmann::json("undefined");
  j["class_weighted_pzero"] = fraction_json(s.class_weighted_pzero);
  return j;
}

inline nlohmann::json to_json(const PropositionReport& rep) {
  nlohmann::json j;
  j["q"] = fraction_json(rep.q);
  j["r"] = fraction_json(rep.r);
  j["lower_bound"] = fraction_json(rep.lower_bound);
  j["exact_p"] = rep.exact_p ? fraction_json(*rep.exact_p) : nlohmann::json(nullptr);
  j["omega"] = rep.omega_names;
  j["inequality_holds"] = rep.inequality_holds();
  return j;
}

inline nlohmann::json to_json(const OmegaCheck& c) {
  nlohmann::json j;
  j["best_value"] = fraction_json(c.best_value);
  j["default_value"] = fraction_json(c.default_value);
  j["default_is_max"] = c.default_is_max;
  j["exhaustive"] = c.exhaustive;
  j["subsets_checked"] = c.subsets_checked;
  j["best_subset"] = c.best_subset;
  return j;
}

inline constexpr const char* kTableStatsCsvHeader =
    "n,p_n,zeros,positives,negatives,zero_density,zero_density_exact,sign_ratio,"
    "abs_density_minus_inv_e,abs_density_minus_one_third,class_weighted_pzero";

/// One CSV row; distances to 1/e and 1/3 are reported, never tested.
inline std::string table_stats_csv_row(const TableStats& s) {
  const double density = to_double(s.zero_density);
  auto ten = [](double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10f", x);
    return std::string(buf);
  };
  std::string row = std::to_string(s.n) + "," + s.p_n.str() + "," + std::to_string(s.zero_entries) + "," +
                    std::to_string(s.positive_entries) + "," + std::to_string(s.negative_entries) + "," +
                    to_fixed_string(s.zero_density, 10) + "," + to_fraction_string(s.zero_density) + "," +
                    (s.sign_ratio ? to_fraction_string(*s.sign_ratio) : std::string("undefined")) + "," +
                    ten(std::abs(density - std::exp(-1.0))) + "," + ten(std::abs(density - 1.0 / 3.0)) + "," +
                    to_fraction_string(s.class_weighted_pzero);
  return row;
}

}  // namespace symchar
