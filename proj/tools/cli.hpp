#pragma once

// Command dispatch for the kuniform tool, kept in a header so tests can run
// commands in-process.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kuniform/kuniform.hpp"

#ifndef KUNIFORM_DEFAULT_DATA_DIR
#define KUNIFORM_DEFAULT_DATA_DIR "data"
#endif

namespace kuniform::cli {

enum class Status { ok, violation_found, not_applicable, error };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::violation_found: return "violation-found";
    case Status::not_applicable: return "not-applicable";
    case Status::error: return "error";
  }
  return "?";
}

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int error = 1;
inline constexpr int usage = 2;
inline constexpr int not_applicable = 3;
}  // namespace exit_code

inline int exit_for(Status s) {
  switch (s) {
    case Status::ok:
    case Status::violation_found: return exit_code::ok;
    case Status::not_applicable: return exit_code::not_applicable;
    case Status::error: return exit_code::error;
  }
  return exit_code::error;
}

struct GlobalOptions {
  std::string format = "json";
  std::uint64_t budget = default_search_budget;
  std::uint64_t cap_dim = 4096;
  unsigned threads = 1;
  std::string data_dir = KUNIFORM_DEFAULT_DATA_DIR;
};

struct Outcome {
  Status status = Status::ok;
  json payload = json::object();
  std::string csv;  // used instead of the JSON envelope when --format csv
};

class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::pair<int, int> parse_n_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw usage_error("--n-range expects a:b");
  try {
    std::size_t p1 = 0, p2 = 0;
    const int lo = std::stoi(text.substr(0, colon), &p1);
    const int hi = std::stoi(text.substr(colon + 1), &p2);
    if (p1 != colon || p2 != text.size() - colon - 1) throw usage_error("--n-range expects a:b");
    if (lo > hi) throw usage_error("--n-range is empty");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw usage_error("--n-range expects integers a:b");
  }
}

inline void require_json(const GlobalOptions& g, const std::string& command) {
  if (g.format != "json") throw usage_error("--format csv is not available for '" + command + "'");
}

inline std::string range_csv(const std::vector<RangeCell>& cells) {
  std::string out = "N_range,k_max\n";
  for (const auto& c : cells) out += range_label(c.lo, c.hi) + "," + std::to_string(c.k_max) + "\n";
  return out;
}

inline json range_cells_json(const std::vector<RangeCell>& cells) {
  json arr = json::array();
  for (const auto& c : cells) arr.push_back({{"N_range", range_label(c.lo, c.hi)}, {"k_max", c.k_max}});
  return arr;
}

inline std::string join(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return out;
}

}  // namespace detail

inline Outcome cmd_bound(const GlobalOptions& g, int d, std::optional<int> n, std::optional<std::string> n_range) {
  if (d < 2) throw usage_error("--d must be at least 2");
  int lo, hi;
  if (n) lo = hi = *n;
  else std::tie(lo, hi) = detail::parse_n_range(*n_range);
  if (lo < 2) throw usage_error("N must be at least 2");
  const auto rows = compute_bounds(d, lo, hi, g.threads);
  Outcome o;
  json records = json::array();
  o.csv = "N,k_max,provenance\n";
  for (const auto& r : rows) {
    records.push_back(bound_to_json(r));
    o.csv += std::to_string(r.n) + "," + std::to_string(r.k_max) + "," + to_string(r.provenance) + "\n";
  }
  o.payload = {{"d", d}, {"records", std::move(records)}};
  return o;
}

inline Outcome cmd_table(const GlobalOptions& g, const std::string& id, const std::string& out_path) {
  const std::filesystem::path dir(g.data_dir);
  Outcome o;
  if (id == "IV") {
    auto in = open_data_file(dir, ame_table_file);
    const auto diffs = diff_ame_table(parse_ame_table(in));
    json rows = json::array();
    json mismatches = json::array();
    o.csv = "d1_range,d2,closed_form_min_n,shadow_n\n";
    for (const auto& d : diffs) {
      const std::string label = range_label(d.expected.d1_lo, d.expected.d1_hi);
      json computed = json::array();
      for (const auto& e : d.computed) {
        computed.push_back({{"d1", e.d1}, {"closed_form_min_n", e.closed_form_min_n}, {"shadow_n", e.shadow_n}});
        if (e.closed_form_min_n != d.expected.closed_form_min_n || e.shadow_n != d.expected.shadow_n)
          mismatches.push_back({{"d1", e.d1},
                                {"d2", e.d2},
                                {"expected_min_n", d.expected.closed_form_min_n},
                                {"computed_min_n", e.closed_form_min_n},
                                {"expected_shadow_n", d.expected.shadow_n},
                                {"computed_shadow_n", e.shadow_n}});
      }
      const auto& first = d.computed.front();
      o.csv += label + "," + std::to_string(d.expected.d2) + "," + std::to_string(first.closed_form_min_n) + "," +
               detail::join(first.shadow_n, ';') + "\n";
      rows.push_back({{"d1_range", label},
                      {"d2", d.expected.d2},
                      {"threshold_matches", d.threshold_matches},
                      {"shadow_matches", d.shadow_matches},
                      {"computed", std::move(computed)}});
    }
    o.status = mismatches.empty() ? Status::ok : Status::violation_found;
    o.payload = {{"table", id}, {"rows", std::move(rows)}, {"diff_count", mismatches.size()}, {"diffs", std::move(mismatches)}};
  } else {
    const auto info = range_table_info(id);
    if (!info) throw usage_error("--paper must be one of I, II, III, IV");
    auto in = open_data_file(dir, info->file);
    const auto expected = parse_range_table(in);
    const auto rows = compute_bounds(info->d, expected.front().lo, expected.back().hi, g.threads);
    const auto diff = diff_range_table(expected, rows);
    json mismatches = json::array();
    for (const auto& m : diff.mismatches)
      mismatches.push_back({{"N", m.n}, {"expected", m.expected}, {"computed", m.computed}});
    o.status = diff.matches() ? Status::ok : Status::violation_found;
    o.csv = detail::range_csv(diff.computed);
    o.payload = {{"table", id},
                 {"d", info->d},
                 {"N_min", expected.front().lo},
                 {"N_max", expected.back().hi},
                 {"expected_cells", expected.size()},
                 {"computed_cells", detail::range_cells_json(diff.computed)},
                 {"cell_layout_matches", diff.expected == diff.computed},
                 {"diff_count", diff.mismatches.size()},
                 {"diffs", std::move(mismatches)}};
  }
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write '" + out_path + "'");
    f << o.csv;
  }
  return o;
}

inline Outcome cmd_ame(const GlobalOptions& g, const std::string& dims, bool all_tests) {
  detail::require_json(g, "ame");
  DimensionProfile profile = [&] {
    try {
      return parse_profile(dims);
    } catch (const std::invalid_argument& e) {
      throw usage_error(e.what());
    }
  }();
  Outcome o;
  try {
    o.payload = ame_to_json(ame_verdict(profile, AmeOptions{g.budget, all_tests}));
  } catch (const budget_exceeded_error& e) {
    o.status = Status::error;
    o.payload = {{"profile", profile.compact()},
                 {"message", e.what()},
                 {"evaluated", e.evaluated()},
                 {"total", e.total()},
                 {"budget", e.budget()}};
  }
  return o;
}

inline Outcome cmd_state(const GlobalOptions& g, const std::string& file, std::optional<int> check_uniform, bool enumerate) {
  detail::require_json(g, "state");
  const auto psi = load_state(file);
  const OracleLimits limits{g.cap_dim, OracleLimits{}.shadow_max_parties};
  Outcome o;
  o.payload = {{"dims", psi.profile().dims()}, {"norm2", kuniform::to_string(psi.norm2())}};
  if (check_uniform) o.payload["k_uniform"] = {{"k", *check_uniform}, {"holds", is_k_uniform(psi, *check_uniform, limits)}};
  if (enumerate) {
    const auto a = direct_enumerator(psi, limits);
    o.payload["a"] = rat_array(a.coeffs());
    o.payload["s"] = rat_array(direct_shadow(psi, limits).coeffs());
    o.payload["constraints_pass"] = validate_state_constraints(a).all_passed();
  }
  return o;
}

namespace suites {

inline json alpha() {
  json failures = json::array();
  int checked = 0;
  for (int d = 2; d <= 5; ++d)
    for (int n = 1; n <= 60; ++n) {
      std::vector<Rat> a(static_cast<std::size_t>(n) + 1, Rat(0));
      a[0] = 1;
      const auto solved = a_to_c(WeightEnumerator(n, d, std::move(a)));
      const auto closed = alpha_vector(n, d);
      for (int i = 0; i <= n / 2; ++i, ++checked)
        if (solved[i] != closed[i]) failures.push_back({{"N", n}, {"d", d}, {"i", i}});
    }
  return {{"checked", checked}, {"failures", std::move(failures)}};
}

inline json recurrence(const std::string& data_dir) {
  auto in = open_data_file(data_dir, "recurrences_d3.txt");
  json specs = json::array();
  json failures = json::array();
  for (const auto& spec : parse_recurrence_specs(in)) {
    const auto r = verify_recurrence(spec, 30);
    json entry{{"ell", r.ell}, {"n_max", r.n_max}, {"passed", r.passed()}};
    if (r.positivity_threshold) entry["coefficients_positive_from"] = *r.positivity_threshold;
    if (!r.passed())
      failures.push_back({{"ell", r.ell},
                          {"violations", r.violations},
                          {"initial_mismatches", r.initial_mismatches},
                          {"positivity_failures", r.positivity_failures}});
    specs.push_back(std::move(entry));
  }
  return {{"checked", specs.size()}, {"specs", std::move(specs)}, {"failures", std::move(failures)}};
}

/// Heterogeneous shadow against the subset-sum evaluation of the AME purity
/// profile, over every odd-N <= 11 multiset of dimensions in {2, 3, 4}.
inline json shadow_oracle() {
  json failures = json::array();
  int checked = 0;
  for (int n = 3; n <= 11; n += 2) {
    std::vector<int> dims(static_cast<std::size_t>(n), 2);
    while (true) {
      const DimensionProfile p(dims);
      ++checked;
      if (hetero_shadow(p).s != shadow_from_purities(ame_purity_profile(p), n)) failures.push_back(p.compact());
      int pos = n - 1;
      while (pos >= 0 && dims[pos] == 4) --pos;
      if (pos < 0) break;
      const int next = dims[pos] + 1;
      for (int i = pos; i < n; ++i) dims[i] = next;
    }
  }
  return {{"checked", checked}, {"failures", std::move(failures)}};
}

}  // namespace suites

inline Outcome cmd_verify(const GlobalOptions& g, const std::string& suite) {
  detail::require_json(g, "verify");
  Outcome o;
  if (suite == "alpha") o.payload = suites::alpha();
  else if (suite == "recurrence") o.payload = suites::recurrence(g.data_dir);
  else if (suite == "shadow-oracle") o.payload = suites::shadow_oracle();
  else throw usage_error("unknown suite '" + suite + "' (alpha, recurrence, shadow-oracle)");
  const bool pass = o.payload["failures"].empty();
  json report{{"suite", suite}, {"result", pass ? "pass" : "fail"}};
  report.update(o.payload);
  o.payload = std::move(report);
  o.status = pass ? Status::ok : Status::error;
  return o;
}

inline Outcome cmd_conjecture(const GlobalOptions& g, int d, const std::string& n_range) {
  if (d != 4 && d != 5) throw usage_error("--d must be 4 or 5");
  auto [lo, hi] = detail::parse_n_range(n_range);
  if (lo < 2) throw usage_error("N must be at least 2");
  Outcome o;
  json rows = json::array();
  int contradictions = 0;
  o.csv = "N,formula,computed,agree,consistent,exception\n";
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  for (const auto& r : conjecture_scan(d, lo, hi)) {
    if (r.formula && !r.consistent && !r.exception) ++contradictions;
    json row{{"N", r.n}, {"formula", r.formula ? json(*r.formula) : json(nullptr)}, {"computed", r.computed},
             {"agree", r.agree}, {"consistent", r.consistent}, {"exception", r.exception}};
    rows.push_back(std::move(row));
    o.csv += std::to_string(r.n) + "," + (r.formula ? std::to_string(*r.formula) : "") + "," +
             std::to_string(r.computed) + "," + flag(r.agree) + "," + flag(r.consistent) + "," + flag(r.exception) + "\n";
  }
  o.payload = {{"d", d}, {"rows", std::move(rows)}, {"unexplained_contradictions", contradictions}};
  return o;
}

inline Outcome cmd_alpha(const GlobalOptions& g, int n, int d) {
  detail::require_json(g, "alpha");
  if (n < 1 || d < 2) throw usage_error("need N >= 1 and d >= 2");
  Outcome o;
  o.payload = {{"N", n}, {"d", d}, {"alpha", rat_array(alpha_vector(n, d))}};
  return o;
}

/// Parses `args` (without the program name), runs the command and writes the
/// result to `out`. Diagnostics go to `err`. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact bounds and certificates for k-uniform and AME states", "kuniform"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->envname("KUNIFORM_FORMAT");
  app.add_option("--budget", g.budget, "Candidate budget for subset searches")
      ->check(CLI::PositiveNumber)
      ->envname("KUNIFORM_BUDGET");
  app.add_option("--cap-dim", g.cap_dim, "Hilbert dimension cap for explicit states")
      ->check(CLI::PositiveNumber)
      ->envname("KUNIFORM_CAP_DIM");
  app.add_option("--threads", g.threads, "Worker threads for bound tables")
      ->check(CLI::Range(1u, 256u))
      ->envname("KUNIFORM_THREADS");
  app.add_option("--data-dir", g.data_dir, "Directory with reference tables")->envname("KUNIFORM_DATA_DIR");

  int d = 0, n_opt = 0, n_alpha = 0, k = 0;
  std::string n_range, paper, out_path, dims, file, suite;
  bool enumerate = false, all_tests = false;

  auto* bound = app.add_subcommand("bound", "Upper bound on k for (C^d)^N");
  bound->add_option("--d", d, "Local dimension")->required();
  auto* n_flag = bound->add_option("--n", n_opt, "Number of parties");
  auto* range_flag = bound->add_option("--n-range", n_range, "Inclusive range a:b");
  n_flag->excludes(range_flag);

  auto* table = app.add_subcommand("table", "Recompute a reference table and diff it");
  table->add_option("--paper", paper, "I, II, III or IV")->required();
  table->add_option("--out", out_path, "Also write the computed table as CSV");

  auto* ame = app.add_subcommand("ame", "AME non-existence tests for a dimension profile");
  ame->add_option("--dims", dims, "Profile such as 3x1,2x8")->required();
  ame->add_flag("--all-tests", all_tests, "Run every test even after one certifies");

  auto* state = app.add_subcommand("state", "Oracle computations on an explicit state");
  state->add_option("--file", file, "State JSON")->required();
  auto* cu = state->add_option("--check-uniform", k, "Check k-uniformity");
  auto* en = state->add_flag("--enumerate", enumerate, "Print weight and shadow enumerators");
  cu->excludes(en);

  auto* verify = app.add_subcommand("verify", "Run a cross-validation suite");
  verify->add_option("--suite", suite, "alpha, recurrence or shadow-oracle")->required();

  auto* conjecture = app.add_subcommand("conjecture", "Compare the conjectured d = 4, 5 formulas with computed bounds");
  conjecture->add_option("--d", d, "4 or 5")->required();
  conjecture->add_option("--n-range", n_range, "Inclusive range a:b")->required();

  auto* alpha = app.add_subcommand("alpha", "Print alpha_0..alpha_{N/2}");
  alpha->add_option("--n", n_alpha, "Number of parties")->required();
  alpha->add_option("--d", d, "Local dimension")->required();

  std::string command = "kuniform";
  for (const auto& a : args) command += " " + a;

  auto emit = [&](Status status, const json& payload) {
    json envelope{{"command", command}, {"status", to_string(status)}, {"payload", payload}};
    out << envelope.dump(2) << "\n";
    return exit_for(status);
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "kuniform: " << e.what() << "\n";
    emit(Status::error, {{"message", e.what()}, {"kind", "usage"}});
    return exit_code::usage;
  }

  try {
    Outcome o;
    if (bound->parsed()) {
      if (!n_flag->count() && !range_flag->count()) throw usage_error("bound needs --n or --n-range");
      o = cmd_bound(g, d, n_flag->count() ? std::optional<int>(n_opt) : std::nullopt,
                    range_flag->count() ? std::optional<std::string>(n_range) : std::nullopt);
    } else if (table->parsed()) {
      o = cmd_table(g, paper, out_path);
    } else if (ame->parsed()) {
      o = cmd_ame(g, dims, all_tests);
    } else if (state->parsed()) {
      if (!cu->count() && !enumerate) throw usage_error("state needs --check-uniform k or --enumerate");
      o = cmd_state(g, file, cu->count() ? std::optional<int>(k) : std::nullopt, enumerate);
    } else if (verify->parsed()) {
      o = cmd_verify(g, suite);
    } else if (conjecture->parsed()) {
      o = cmd_conjecture(g, d, n_range);
    } else {
      o = cmd_alpha(g, n_alpha, d);
    }
    if (g.format == "csv") {
      out << o.csv;
      return exit_for(o.status);
    }
    return emit(o.status, o.payload);
  } catch (const usage_error& e) {
    err << "kuniform: " << e.what() << "\n";
    emit(Status::error, {{"message", e.what()}, {"kind", "usage"}});
    return exit_code::usage;
  } catch (const not_applicable_error& e) {
    err << "kuniform: " << e.what() << "\n";
    return emit(Status::not_applicable, {{"message", e.what()}});
  } catch (const std::exception& e) {
    err << "kuniform: " << e.what() << "\n";
    return emit(Status::error, {{"message", e.what()}});
  }
}

}  // namespace kuniform::cli
