#pragma once

// Command-line front end. `run` is separate from main() so tests can drive
// it with captured streams.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "symchar/symchar.hpp"

namespace symchar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitCap = 3;

/// Environment variable overriding the default enumeration cap.
inline constexpr const char* kCapEnvVar = "SYMCHAR_CAP";

struct RunConfig {
  std::string subcommand;
  int n = 0;
  int n_min = 0;
  int n_max = 0;
  std::uint64_t samples = 100000;
  std::uint64_t seed = kDefaultSeed;
  double C = kDefaultOmegaC;
  std::string f_mode = "log";
  bool strict = false;
  bool exact = true;
  bool exhaustive_omega = false;
  std::string format = "text";
  std::string output;
  std::string file;
  std::uint64_t cap = kDefaultEnumerationCap;
  unsigned threads = 1;

  nlohmann::json to_json() const {
    return {{"subcommand", subcommand}, {"n", n},          {"n_min", n_min},   {"n_max", n_max},
            {"samples", samples},       {"seed", seed},    {"C", C},           {"f", f_mode},
            {"strict", strict},         {"exact", exact},  {"exhaustive_omega", exhaustive_omega},
            {"format", format},         {"output", output}, {"file", file},     {"cap", cap},
            {"threads", threads}};
  }

  OmegaSpec omega() const {
    OmegaSpec spec;
    spec.C = C;
    spec.strict = strict;
    if (f_mode != "log") {
      std::size_t used = 0;
      double value = 0;
      try {
        value = std::stod(f_mode, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != f_mode.size() || f_mode.empty()) throw ValidationError("--f must be 'log' or a number, got '" + f_mode + "'");
      spec.f_constant = value;
    }
    validate(spec);
    return spec;
  }

  TableOptions table_options() const { return {threads, cap}; }
};

inline std::uint64_t default_cap() {
  if (const char* env = std::getenv(kCapEnvVar); env && *env) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw ValidationError(std::string(kCapEnvVar) + " must be a positive integer");
  }
  return kDefaultEnumerationCap;
}

/// "p/q (decimal)": exact plus 15 significant digits.
inline std::string human(const Rational& q) { return to_fraction_string(q) + " (" + to_significant_string(q, 15) + ")"; }

namespace detail {

inline void emit_table_text(std::ostream& out, const CharacterTable& table) {
  std::size_t width = 1;
  std::size_t label_width = 3;
  for (const auto& v : table.values) width = std::max(width, v.str().size());
  for (const auto& l : table.labels) {
    width = std::max(width, l.to_string().size());
    label_width = std::max(label_width, l.to_string().size());
  }
  out << std::setw(static_cast<int>(label_width)) << "chi";
  for (const auto& l : table.labels) out << ' ' << std::setw(static_cast<int>(width)) << l.to_string();
  out << '\n';
  for (std::size_t r = 0; r < table.size(); ++r) {
    out << std::setw(static_cast<int>(label_width)) << table.labels[r].to_string();
    for (std::size_t c = 0; c < table.size(); ++c) out << ' ' << std::setw(static_cast<int>(width)) << table.at(r, c).str();
    out << '\n';
  }
}

inline void emit_summary_text(std::ostream& out, const std::string& what, const SampleSummary& s) {
  out << what << ": " << std::setprecision(15) << s.estimate << " +/- " << s.std_error << " (samples " << s.samples
      << ", seed " << s.seed << ")\n";
  for (const auto& [k, v] : s.extra) out << "  " << k << ": " << v << '\n';
}

inline void execute(const RunConfig& cfg, std::ostream& out) {
  const auto fmt = cfg.format;
  auto with_config = [&](nlohmann::json j) {
    j["config"] = cfg.to_json();
    out << j.dump(2) << '\n';
  };

  if (cfg.subcommand == "table") {
    const auto table = character_table(cfg.n, cfg.table_options());
    if (fmt == "csv") write_csv(out, table);
    else if (fmt == "json") with_config({{"table", to_json(table)}});
    else emit_table_text(out, table);

  } else if (cfg.subcommand == "pzero") {
    const Rational p = exact_pzero(cfg.n, cfg.table_options());
    if (fmt == "csv") out << "n,p_zero\n" << cfg.n << ',' << to_fraction_string(p) << '\n';
    else if (fmt == "json") with_config({{"n", cfg.n}, {"p_zero", fraction_json(p)}});
    else out << to_fraction_string(p) << "  (" << to_significant_string(p, 15) << ")\n";

  } else if (cfg.subcommand == "bound") {
    const auto rep = lemma_bound(cfg.n, cfg.omega(), cfg.exact, cfg.table_options());
    if (fmt == "json") {
      auto j = to_json(rep);
      j["inequality_holds"] = rep.inequality_holds();
      with_config(std::move(j));
    } else if (fmt == "csv") {
      out << "n,p_n,omega_count,q_n,r_n,lower_bound,exact_p,inequality_holds\n"
          << rep.n << ',' << rep.p_n.str() << ',' << rep.omega_count.str() << ',' << to_fraction_string(rep.q_n) << ','
          << to_fraction_string(rep.r_n) << ',' << to_fraction_string(rep.lower_bound) << ','
          << (rep.exact_p ? to_fraction_string(*rep.exact_p) : std::string()) << ','
          << (rep.inequality_holds() ? "true" : "false") << '\n';
    } else {
      out << "n = " << rep.n << ", p_n = " << rep.p_n.str() << '\n'
          << "Omega_n: largest part >= " << rep.min_largest_part << ", |Omega_n| = " << rep.omega_count.str() << '\n'
          << "Q_n = " << human(rep.q_n) << '\n'
          << "|Omega_n|/p_n = " << human(rep.r_n) << '\n'
          << "lower_bound = " << human(rep.lower_bound) << '\n';
      if (rep.exact_p) {
        out << "exact P_n = " << human(*rep.exact_p) << '\n'
            << "1 >= P_n >= Q_n - |Omega_n|/p_n: " << (rep.inequality_holds() ? "OK" : "VIOLATED") << '\n';
      }
    }

  } else if (cfg.subcommand == "mc-pzero") {
    const auto s = montecarlo_pzero(cfg.n, cfg.samples, cfg.seed, cfg.threads, cfg.cap);
    if (fmt == "json") with_config({{"n", cfg.n}, {"summary", to_json(s)}});
    else if (fmt == "csv") out << "n,estimate,std_error,samples,seed\n" << cfg.n << ',' << std::setprecision(17) << s.estimate << ',' << s.std_error << ',' << s.samples << ',' << s.seed << '\n';
    else emit_summary_text(out, "P_" + std::to_string(cfg.n) + " estimate", s);

  } else if (cfg.subcommand == "goncharov") {
    const auto g = goncharov_experiment(cfg.n, cfg.samples, cfg.seed, cfg.threads);
    if (fmt == "json") {
      with_config(to_json(g));
    } else if (fmt == "csv") {
      out << "normalized_cycles\n" << std::setprecision(17);
      for (double v : g.normalized_values) out << v << '\n';
    } else {
      out << "n = " << g.n << ", samples = " << g.sample_count << ", seed = " << g.seed << '\n'
          << std::setprecision(15) << "mean cycle count = " << g.mean_cycles << '\n'
          << "KS distance to limit law = " << g.ks_distance << '\n';
    }

  } else if (cfg.subcommand == "long-cycle") {
    const auto s = long_cycle_frequency(cfg.n, cfg.samples, cfg.seed, cfg.threads);
    if (fmt == "json") with_config({{"n", cfg.n}, {"summary", to_json(s)}});
    else if (fmt == "csv") out << "n,estimate,std_error,samples,seed\n" << cfg.n << ',' << std::setprecision(17) << s.estimate << ',' << s.std_error << ',' << s.samples << ',' << s.seed << '\n';
    else emit_summary_text(out, "long-cycle frequency", s);

  } else if (cfg.subcommand == "table-stats") {
    const auto series = stats_series(cfg.n_min, cfg.n_max, cfg.table_options());
    if (fmt == "csv") {
      out << kTableStatsCsvHeader << '\n';
      for (const auto& s : series) out << table_stats_csv_row(s) << '\n';
    } else if (fmt == "json") {
      auto arr = nlohmann::json::array();
      for (const auto& s : series) arr.push_back(to_json(s));
      with_config({{"series", arr}});
    } else {
      for (const auto& s : series) {
        out << "n = " << s.n << ": p_n = " << s.p_n.str() << ", zeros " << s.zero_entries << ", positives "
            << s.positive_entries << ", negatives " << s.negative_entries << '\n'
            << "  zero density = " << human(s.zero_density) << '\n'
            << "  sign ratio = " << (s.sign_ratio ? human(*s.sign_ratio) : std::string("undefined")) << '\n'
            << "  class-weighted P_n = " << human(s.class_weighted_pzero) << '\n';
      }
    }

  } else if (cfg.subcommand == "group") {
    std::ifstream in(cfg.file);
    if (!in) throw ValidationError("cannot read class data file '" + cfg.file + "'");
    const ClassData data = load_class_data(in);
    const auto omega = default_omega(data);
    const auto rep = proposition_bound(data, omega);
    std::optional<OmegaCheck> check;
    if (cfg.exhaustive_omega) check = best_omega_check(data, 1u << 16, cfg.seed);
    if (fmt == "json") {
      nlohmann::json j{{"group", data.group}, {"classes", data.num_classes()}, {"report", to_json(rep)}};
      if (check) j["omega_check"] = to_json(*check);
      with_config(std::move(j));
    } else {
      out << "group " << (data.group.empty() ? "(unnamed)" : data.group) << ": order " << data.order.str() << ", "
          << data.num_classes() << " classes\n"
          << "Omega (larger-than-average classes):";
      for (const auto& name : rep.omega_names) out << ' ' << name;
      out << '\n'
          << "Q = " << human(rep.q) << '\n'
          << "R = " << human(rep.r) << '\n'
          << "lower_bound = " << human(rep.lower_bound) << '\n';
      if (rep.exact_p) {
        out << "exact P(G) = " << human(*rep.exact_p) << '\n'
            << "1 >= P(G) >= Q - R: " << (rep.inequality_holds() ? "OK" : "VIOLATED") << '\n';
      }
      if (check) {
        out << (check->exhaustive ? "exhaustive" : "sampled") << " subset check over " << check->subsets_checked
            << " subsets: max Q - R = " << human(check->best_value) << ", default attains max: "
            << (check->default_is_max ? "yes" : "no") << '\n';
      }
    }

  } else if (cfg.subcommand == "export-group") {
    out << to_json(symmetric_group_class_data(cfg.n, cfg.table_options())).dump(2) << '\n';

  } else {
    throw ValidationError("unknown subcommand '" + cfg.subcommand + "'");
  }
}

}  // namespace detail

/// Parses argv, runs one subcommand, and returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  RunConfig cfg;
  try {
    cfg.cap = default_cap();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  CLI::App app{"Exact character values of symmetric groups and vanishing-probability checks"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output,-o", cfg.output, "Write the report to this file instead of stdout");
  app.add_option("--cap", cfg.cap, "Enumeration cap on p_n (table builds: on p_n^2)")->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--samples", cfg.samples, "Monte Carlo sample count");

  auto with_n = [&](const std::string& name, const std::string& help, int min_n) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("n", cfg.n, "Size of the symmetric group")->required()->check(CLI::Range(min_n, 1 << 30));
    return sub;
  };
  with_n("table", "Character table of S_n", 1);
  with_n("pzero", "Exact probability that chi(g) = 0", 1);
  auto* bound = with_n("bound", "Lower bound Q_n - |Omega_n|/p_n and its check against P_n", 2);
  bound->add_option("--C", cfg.C, "Threshold constant C > 0");
  bound->add_option("--f", cfg.f_mode, "f(n): 'log' for natural log n, or a constant");
  bound->add_flag("--strict", cfg.strict, "Use lambda_1 > threshold");
  bound->add_flag("!--no-exact", cfg.exact, "Skip the exact P_n computation");
  with_n("mc-pzero", "Monte Carlo estimate of P_n", 1);
  with_n("goncharov", "Normalized cycle counts against the limit law", 2);
  with_n("long-cycle", "Frequency of a cycle of length >= n/(2 log n)", 3);
  auto* stats = app.add_subcommand("table-stats", "Zero density and sign ratio of character tables");
  stats->add_option("n-min", cfg.n_min)->required()->check(CLI::Range(1, 1 << 20));
  stats->add_option("n-max", cfg.n_max)->required()->check(CLI::Range(1, 1 << 20));
  auto* group = app.add_subcommand("group", "Bound for a finite group given as class-data JSON");
  group->add_option("file", cfg.file)->required();
  group->add_flag("--exhaustive-omega", cfg.exhaustive_omega, "Check default Omega against all class subsets");
  with_n("export-group", "Emit S_n as class-data JSON", 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitValidation;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    if (cfg.subcommand == "bound") (void)cfg.omega();
    if (cfg.samples == 0 && (cfg.subcommand == "mc-pzero" || cfg.subcommand == "goncharov" || cfg.subcommand == "long-cycle")) {
      throw ValidationError("--samples must be at least 1");
    }
    std::ostringstream report;
    detail::execute(cfg, report);
    if (cfg.output.empty()) {
      out << report.str();
    } else {
      std::ofstream file(cfg.output, std::ios::binary);
      if (!file) throw ValidationError("cannot write output file '" + cfg.output + "'");
      file << report.str();
    }
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace symchar::cli
