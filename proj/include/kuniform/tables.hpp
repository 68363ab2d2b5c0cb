#pragma once

// Reference tables: range-compressed k bounds for d = 3, 4, 5 and the AME
// non-existence table for C^{d1} (x) (C^{d2})^{(x)2n}. Parses the checked-in
// fixtures, recomputes every cell and diffs them exactly.

#include <algorithm>
#include <charconv>
#include <exception>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "kuniform/hetero.hpp"
#include "kuniform/uniform_bounds.hpp"

namespace kuniform {

struct RangeCell {
  int lo;
  int hi;
  int k_max;
  friend bool operator==(const RangeCell&, const RangeCell&) = default;
};

inline std::string range_label(int lo, int hi) {
  return lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi);
}

namespace detail {

inline int parse_int_field(std::string_view s, const std::string& context) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument(context + ": expected an integer, got '" + std::string(s) + "'");
  return v;
}

inline std::pair<int, int> parse_range(std::string_view s, const std::string& context) {
  const auto dash = s.find('-', 1);
  if (dash == std::string_view::npos) {
    const int v = parse_int_field(s, context);
    return {v, v};
  }
  return {parse_int_field(s.substr(0, dash), context), parse_int_field(s.substr(dash + 1), context)};
}

inline std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

/// Non-comment, non-blank lines; the first must equal `header`.
inline std::vector<std::pair<int, std::string>> data_lines(std::istream& in, const std::string& header) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int lineno = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!saw_header) {
      if (line != header) throw std::invalid_argument("expected header '" + header + "', got '" + line + "'");
      saw_header = true;
      continue;
    }
    out.emplace_back(lineno, line);
  }
  if (!saw_header) throw std::invalid_argument("table has no header");
  return out;
}

}  // namespace detail

inline std::vector<RangeCell> parse_range_table(std::istream& in) {
  std::vector<RangeCell> cells;
  for (const auto& [lineno, line] : detail::data_lines(in, "N_range,k_max")) {
    const std::string ctx = "line " + std::to_string(lineno);
    const auto f = detail::split(line, ',');
    if (f.size() != 2) throw std::invalid_argument(ctx + ": expected 2 fields");
    const auto [lo, hi] = detail::parse_range(f[0], ctx);
    if (lo > hi) throw std::invalid_argument(ctx + ": empty range");
    if (!cells.empty() && lo != cells.back().hi + 1) throw std::invalid_argument(ctx + ": ranges must be contiguous");
    cells.push_back({lo, hi, detail::parse_int_field(f[1], ctx)});
  }
  if (cells.empty()) throw std::invalid_argument("range table has no rows");
  return cells;
}

/// Merges consecutive N with equal k_max.
inline std::vector<RangeCell> compress_ranges(const std::vector<BoundVerdict>& rows) {
  std::vector<RangeCell> cells;
  for (const auto& r : rows) {
    if (!cells.empty() && cells.back().k_max == r.k_max && cells.back().hi + 1 == r.n) cells.back().hi = r.n;
    else cells.push_back({r.n, r.n, r.k_max});
  }
  return cells;
}

/// k_upper_bound for every N in [lo, hi]. Work is split into interleaved
/// stripes across `threads` workers; output order is always by N.
inline std::vector<BoundVerdict> compute_bounds(int d, int lo, int hi, unsigned threads = 1) {
  if (lo < 2 || hi < lo) throw std::out_of_range("N range must satisfy 2 <= lo <= hi");
  const auto count = static_cast<std::size_t>(hi - lo + 1);
  std::vector<BoundVerdict> out(count);
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = k_upper_bound(lo + static_cast<int>(i), d);
    return out;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += threads) out[i] = k_upper_bound(lo + static_cast<int>(i), d);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  pool.clear();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

struct RangeMismatch {
  int n;
  int expected;
  int computed;
};

struct RangeTableDiff {
  std::vector<RangeCell> expected;
  std::vector<RangeCell> computed;
  std::vector<RangeMismatch> mismatches;  // per N

  [[nodiscard]] bool matches() const { return mismatches.empty() && expected == computed; }
};

inline RangeTableDiff diff_range_table(const std::vector<RangeCell>& expected, const std::vector<BoundVerdict>& rows) {
  RangeTableDiff diff{expected, compress_ranges(rows), {}};
  for (const auto& r : rows) {
    auto it = std::find_if(expected.begin(), expected.end(), [&](const RangeCell& c) { return c.lo <= r.n && r.n <= c.hi; });
    if (it == expected.end()) continue;
    if (it->k_max != r.k_max) diff.mismatches.push_back({r.n, it->k_max, r.k_max});
  }
  return diff;
}

struct AmeTableRow {
  int d1_lo;
  int d1_hi;
  int d2;
  int closed_form_min_n;
  std::vector<int> shadow_n;
  friend bool operator==(const AmeTableRow&, const AmeTableRow&) = default;
};

inline std::vector<AmeTableRow> parse_ame_table(std::istream& in) {
  std::vector<AmeTableRow> rows;
  for (const auto& [lineno, line] : detail::data_lines(in, "d1_range,d2,closed_form_min_n,shadow_n")) {
    const std::string ctx = "line " + std::to_string(lineno);
    const auto f = detail::split(line, ',');
    if (f.size() != 4) throw std::invalid_argument(ctx + ": expected 4 fields");
    AmeTableRow row{};
    std::tie(row.d1_lo, row.d1_hi) = detail::parse_range(f[0], ctx);
    if (row.d1_lo > row.d1_hi) throw std::invalid_argument(ctx + ": empty d1 range");
    row.d2 = detail::parse_int_field(f[1], ctx);
    row.closed_form_min_n = detail::parse_int_field(f[2], ctx);
    if (!f[3].empty())
      for (const auto& v : detail::split(f[3], ';')) row.shadow_n.push_back(detail::parse_int_field(v, ctx));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Values for a single d1: the closed-form threshold and every n below it
/// whose heterogeneous shadow has a negative coefficient.
struct AmeTableEntry {
  int d1;
  int d2;
  int closed_form_min_n;
  std::vector<int> shadow_n;
};

inline AmeTableEntry compute_ame_entry(int d1, int d2) {
  AmeTableEntry e{d1, d2, corollary7_threshold(d1, d2), {}};
  for (int n = 1; n < e.closed_form_min_n; ++n) {
    std::vector<int> dims(static_cast<std::size_t>(2 * n) + 1, d2);
    dims[0] = d1;
    if (hetero_shadow(DimensionProfile(std::move(dims))).first_negative()) e.shadow_n.push_back(n);
  }
  return e;
}

struct AmeRowDiff {
  AmeTableRow expected;
  std::vector<AmeTableEntry> computed;  // one per d1 in the row's range
  bool threshold_matches = true;
  bool shadow_matches = true;
};

inline std::vector<AmeRowDiff> diff_ame_table(const std::vector<AmeTableRow>& expected) {
  std::vector<AmeRowDiff> out;
  for (const auto& row : expected) {
    AmeRowDiff diff{row, {}};
    for (int d1 = row.d1_lo; d1 <= row.d1_hi; ++d1) {
      auto e = compute_ame_entry(d1, row.d2);
      diff.threshold_matches = diff.threshold_matches && e.closed_form_min_n == row.closed_form_min_n;
      diff.shadow_matches = diff.shadow_matches && e.shadow_n == row.shadow_n;
      diff.computed.push_back(std::move(e));
    }
    out.push_back(std::move(diff));
  }
  return out;
}

/// Bound tables by identifier: "I" (d = 3), "II" (d = 4), "III" (d = 5).
struct RangeTableInfo {
  std::string id;
  int d;
  std::string file;
};

inline std::optional<RangeTableInfo> range_table_info(std::string_view id) {
  if (id == "I") return RangeTableInfo{"I", 3, "table_I.csv"};
  if (id == "II") return RangeTableInfo{"II", 4, "table_II.csv"};
  if (id == "III") return RangeTableInfo{"III", 5, "table_III.csv"};
  return std::nullopt;
}

inline constexpr std::string_view ame_table_file = "table_IV.csv";

inline std::ifstream open_data_file(const std::filesystem::path& dir, std::string_view name) {
  std::ifstream in(dir / name);
  if (!in) throw std::invalid_argument("cannot open data file '" + (dir / name).string() + "'");
  return in;
}

}  // namespace kuniform
