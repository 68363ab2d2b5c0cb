#pragma once

// AME non-existence tests for heterogeneous systems C^{d_1} (x) ... (x) C^{d_N}:
// the generalized Scott inequality over (floor(N/2)+2)-subsets, its closed
// form for C^{d1} (x) (C^{d2})^{(x)2n}, and the heterogeneous shadow
// coefficients of the AME purity profile.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kuniform/errors.hpp"
#include "kuniform/exact.hpp"

namespace kuniform {

class DimensionProfile {
 public:
  explicit DimensionProfile(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.size() < 2) throw std::invalid_argument("a dimension profile needs at least 2 parties");
    for (int d : dims_)
      if (d < 2) throw std::invalid_argument("local dimensions must be at least 2");
  }

  static DimensionProfile homogeneous(int d, int n) { return DimensionProfile(std::vector<int>(n, d)); }

  [[nodiscard]] int parties() const noexcept { return static_cast<int>(dims_.size()); }
  [[nodiscard]] const std::vector<int>& dims() const noexcept { return dims_; }
  [[nodiscard]] int operator[](std::size_t i) const { return dims_.at(i); }

  [[nodiscard]] bool is_homogeneous() const {
    return std::all_of(dims_.begin(), dims_.end(), [&](int d) { return d == dims_.front(); });
  }

  [[nodiscard]] BigInt total_dimension() const {
    BigInt t(1);
    for (int d : dims_) t *= d;
    return t;
  }

  /// Every floor(N/2)-subset A has prod_A d_i <= prod_{A^c} d_i. The binding
  /// subset holds the floor(N/2) largest dimensions.
  [[nodiscard]] bool schmidt_feasible() const {
    auto sorted = dims_;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const std::size_t half = dims_.size() / 2;
    BigInt big(1), rest(1);
    for (std::size_t i = 0; i < sorted.size(); ++i) (i < half ? big : rest) *= sorted[i];
    return big <= rest;
  }

  /// Run-length form "3x1,2x10".
  [[nodiscard]] std::string compact() const {
    std::string out;
    for (std::size_t i = 0; i < dims_.size();) {
      std::size_t j = i;
      while (j < dims_.size() && dims_[j] == dims_[i]) ++j;
      if (!out.empty()) out += ',';
      out += std::to_string(dims_[i]) + "x" + std::to_string(j - i);
      i = j;
    }
    return out;
  }

  friend bool operator==(const DimensionProfile&, const DimensionProfile&) = default;

 private:
  std::vector<int> dims_;
};

/// Parses comma-separated "<dim>x<count>" terms, e.g. "3x1,2x10".
inline DimensionProfile parse_profile(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end || s.empty())
      throw std::invalid_argument("malformed profile '" + std::string(text) + "'");
    return v;
  };
  std::vector<int> dims;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const auto term = text.substr(pos, comma - pos);
    const auto x = term.find('x');
    if (x == std::string_view::npos)
      throw std::invalid_argument("profile term '" + std::string(term) + "' is not <dim>x<count>");
    const int dim = parse_int(term.substr(0, x));
    const int count = parse_int(term.substr(x + 1));
    if (count < 1) throw std::invalid_argument("profile term count must be positive");
    if (dims.size() + static_cast<std::size_t>(count) > 100000) throw std::invalid_argument("profile too large");
    dims.insert(dims.end(), static_cast<std::size_t>(count), dim);
    pos = comma + 1;
  }
  return DimensionProfile(std::move(dims));
}

struct ScottWitness {
  std::vector<int> subset;  // 0-based party indices, ascending
  Rat lhs;                  // negative certifies non-existence
};

inline int scott_subset_size(const DimensionProfile& profile) { return profile.parties() / 2 + 2; }

/// (prod_{i in A} d_i^2 / prod_i d_i) (1 - sum_{i in A} 1/d_i^2) + floor(N/2) + 1.
inline Rat scott_check(const DimensionProfile& profile, std::span<const int> subset) {
  const int n = profile.parties();
  if (static_cast<int>(subset.size()) != scott_subset_size(profile))
    throw std::out_of_range("subset must have floor(N/2)+2 elements");
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  BigInt sq(1);
  Rat inv_sum(0);
  for (int i : subset) {
    if (i < 0 || i >= n || used[i]) throw std::out_of_range("subset indices must be distinct parties");
    used[i] = true;
    const long d = profile[i];
    sq *= d * d;
    inv_sum += Rat(1, d * d);
  }
  Rat lead(sq, profile.total_dimension());
  lead.canonicalize();
  return lead * (1 - inv_sum) + (n / 2 + 1);
}

namespace detail {

struct DimensionClass {
  int dim;
  std::vector<int> parties;
};

inline std::vector<DimensionClass> dimension_classes(const DimensionProfile& profile) {
  std::map<int, std::vector<int>, std::greater<>> by_dim;
  for (int i = 0; i < profile.parties(); ++i) by_dim[profile[i]].push_back(i);
  std::vector<DimensionClass> out;
  for (auto& [d, idx] : by_dim) out.push_back({d, std::move(idx)});
  return out;
}

/// Number of count vectors 0 <= k_c <= |class c| with sum m, saturating.
inline std::uint64_t count_compositions(const std::vector<DimensionClass>& classes, int m) {
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(m) + 1, 0);
  ways[0] = 1;
  for (const auto& c : classes) {
    std::vector<std::uint64_t> next(ways.size(), 0);
    for (int s = 0; s <= m; ++s) {
      if (ways[s] == 0) continue;
      for (int k = 0; k <= static_cast<int>(c.parties.size()) && s + k <= m; ++k)
        next[s + k] = next[s + k] > cap - ways[s] ? cap : next[s + k] + ways[s];
    }
    ways = std::move(next);
  }
  return ways[m];
}

}  // namespace detail

inline constexpr std::uint64_t default_search_budget = 10'000'000;

/// Searches all (floor(N/2)+2)-subsets for a negative Scott value. The value
/// depends only on how many parties of each dimension A contains, so the
/// search runs over those count vectors: largest dimensions first, in
/// lexicographically descending order. The reported subset takes the
/// lowest-indexed parties of each dimension. Throws budget_exceeded_error
/// rather than returning a partial answer.
inline std::optional<ScottWitness> scott_search(const DimensionProfile& profile,
                                                std::uint64_t budget = default_search_budget) {
  const int n = profile.parties();
  const int m = scott_subset_size(profile);
  if (m > n) return std::nullopt;

  const auto classes = detail::dimension_classes(profile);
  const std::uint64_t total = detail::count_compositions(classes, m);
  const BigInt total_dim = profile.total_dimension();
  const Rat offset(n / 2 + 1);

  std::vector<int> counts(classes.size(), 0);
  std::uint64_t evaluated = 0;
  std::optional<std::vector<int>> found;

  // Suffix capacities for pruning infeasible partial vectors.
  std::vector<int> suffix(classes.size() + 1, 0);
  for (std::size_t c = classes.size(); c-- > 0;)
    suffix[c] = suffix[c + 1] + static_cast<int>(classes[c].parties.size());

  auto value_of = [&]() {
    BigInt sq(1);
    Rat inv_sum(0);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const long d = classes[c].dim;
      sq *= pow_int(BigInt(d * d), static_cast<unsigned long>(counts[c]));
      inv_sum += make_rat(counts[c], d * d);
    }
    Rat lead(sq, total_dim);
    lead.canonicalize();
    return Rat(lead * (1 - inv_sum) + offset);
  };

  auto recurse = [&](auto&& self, std::size_t c, int remaining) -> bool {
    if (c == classes.size()) {
      if (remaining != 0) return false;
      if (evaluated == budget) throw budget_exceeded_error(evaluated, total, budget);
      ++evaluated;
      if (value_of() < 0) {
        found = counts;
        return true;
      }
      return false;
    }
    const int cap = std::min(remaining, static_cast<int>(classes[c].parties.size()));
    for (int k = cap; k >= 0; --k) {
      if (remaining - k > suffix[c + 1]) break;
      counts[c] = k;
      if (self(self, c + 1, remaining - k)) return true;
    }
    counts[c] = 0;
    return false;
  };
  recurse(recurse, 0, m);
  if (!found) return std::nullopt;

  ScottWitness w;
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (int k = 0; k < (*found)[c]; ++k) w.subset.push_back(classes[c].parties[k]);
  std::sort(w.subset.begin(), w.subset.end());
  w.lhs = scott_check(profile, w.subset);
  return w;
}

/// Smallest n certified by the closed-form Scott thresholds for
/// C^{d1} (x) (C^{d2})^{(x)2n}:
///   d1 < d2:          n > (d2^4 - d1)/(d2^2 - d1) - 2
///   d2 <= d1 <= d2^2: n > d2^2 (d1 + 1)/d1 - 1
inline int corollary7_threshold(int d1, int d2) {
  if (d1 < 2 || d2 < 2) throw std::invalid_argument("local dimensions must be at least 2");
  const long a = d1, b = d2;
  if (a > b * b) throw infeasible_profile_error("d1 > d2^2 fails the Schmidt precheck");
  Rat bound = a < b ? make_rat(b * b * b * b - a, b * b - a) - 2 : make_rat(b * b * (a + 1), a) - 1;
  bound.canonicalize();
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  return static_cast<int>(fl.get_si()) + 1;
}

/// Shape d1 (x) d2^{2n}: odd N with at least N-1 parties sharing dimension d2.
struct SplitProfile {
  int d1;
  int d2;
  int n;
  int d1_party;  // index of the odd party out (0 when homogeneous)
};

inline std::optional<SplitProfile> split_profile(const DimensionProfile& profile) {
  const int total = profile.parties();
  if (total % 2 == 0) return std::nullopt;
  if (profile.is_homogeneous()) return SplitProfile{profile[0], profile[0], (total - 1) / 2, 0};
  std::map<int, int> freq;
  for (int d : profile.dims()) ++freq[d];
  if (freq.size() != 2) return std::nullopt;
  auto it = freq.begin();
  auto [da, ca] = *it++;
  auto [db, cb] = *it;
  if (ca != 1 && cb != 1) return std::nullopt;
  const int d1 = ca == 1 ? da : db;
  const int d2 = ca == 1 ? db : da;
  const auto pos = std::find(profile.dims().begin(), profile.dims().end(), d1) - profile.dims().begin();
  return SplitProfile{d1, d2, (total - 1) / 2, static_cast<int>(pos)};
}

/// The Scott subset behind the closed-form threshold: the odd party plus n+1
/// others when d2 <= d1, otherwise n+2 parties of dimension d2.
inline std::vector<int> closed_form_subset(const DimensionProfile& profile, const SplitProfile& s) {
  std::vector<int> subset;
  const int want = s.n + 2;
  if (s.d2 <= s.d1) subset.push_back(s.d1_party);
  for (int i = 0; i < profile.parties() && static_cast<int>(subset.size()) < want; ++i)
    if (i != s.d1_party) subset.push_back(i);
  std::sort(subset.begin(), subset.end());
  return subset;
}

struct HeteroShadow {
  DimensionProfile profile;
  std::vector<Rat> a_prime;  // A'_0..A'_N
  std::vector<Rat> s;        // s_0..s_N

  [[nodiscard]] std::optional<int> first_negative() const {
    for (std::size_t j = 0; j < s.size(); ++j)
      if (s[j] < 0) return static_cast<int>(j);
    return std::nullopt;
  }
};

/// s_j = sum_k [sum_a (-1)^a C(N-k, N-j-a) C(k, a)] A'_k with
/// A'_k = e_k(1/d_1, ..., 1/d_N) for k <= (N-1)/2 and A'_{N-k} = A'_k.
inline HeteroShadow hetero_shadow(const DimensionProfile& profile) {
  const int n = profile.parties();
  if (n % 2 == 0) throw not_applicable_error("heterogeneous shadow requires an odd number of parties");
  std::vector<Rat> inv;
  inv.reserve(profile.dims().size());
  for (int d : profile.dims()) inv.emplace_back(1, d);
  const auto e = elem_sym_all(inv);

  const int half = (n - 1) / 2;
  std::vector<Rat> a_prime(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= half; ++k) {
    a_prime[k] = e[k];
    a_prime[n - k] = e[k];
  }

  std::vector<Rat> s(static_cast<std::size_t>(n) + 1, Rat(0));
  for (int j = 0; j <= n; ++j) {
    for (int k = 0; k <= n; ++k) {
      BigInt kernel(0);
      for (int a = std::max(0, k - j); a <= std::min(k, n - j); ++a) {
        BigInt term = binom(n - k, n - j - a) * binom(k, a);
        if (a % 2) kernel -= term;
        else kernel += term;
      }
      if (kernel != 0) s[j] += Rat(kernel) * a_prime[k];
    }
  }
  return {profile, std::move(a_prime), std::move(s)};
}

enum class AmeStatus { infeasible, nonexistent, unknown };

inline const char* to_string(AmeStatus s) {
  switch (s) {
    case AmeStatus::infeasible: return "infeasible";
    case AmeStatus::nonexistent: return "nonexistent";
    case AmeStatus::unknown: return "unknown";
  }
  return "?";
}

enum class CertificateKind { none, scott_witness, shadow_negative };

inline const char* to_string(CertificateKind c) {
  switch (c) {
    case CertificateKind::none: return "none";
    case CertificateKind::scott_witness: return "scott-witness";
    case CertificateKind::shadow_negative: return "shadow-negative";
  }
  return "?";
}

struct AmeOptions {
  std::uint64_t budget = default_search_budget;
  /// Keep running later tests after one certifies, for side-by-side reports.
  bool run_all = false;
};

struct AmeVerdict {
  DimensionProfile profile;
  AmeStatus status = AmeStatus::unknown;
  CertificateKind certificate = CertificateKind::none;
  /// For scott-witness: "closed-form" (closed-form threshold) or "subset-search".
  std::string via;

  std::optional<SplitProfile> split;
  std::optional<int> closed_form_min_n;  // when the profile has the split shape
  std::optional<ScottWitness> scott;
  bool scott_searched = false;
  std::optional<HeteroShadow> shadow;
  std::optional<int> shadow_index;  // first negative s_j
};

/// Schmidt precheck, then the closed-form threshold (split profiles), then the
/// subset search, then the heterogeneous shadow (odd N). The first test that
/// certifies decides; a verdict is never "exists".
inline AmeVerdict ame_verdict(const DimensionProfile& profile, const AmeOptions& opts = {}) {
  AmeVerdict v{profile};
  if (!profile.schmidt_feasible()) {
    v.status = AmeStatus::infeasible;
    return v;
  }
  auto certify = [&](CertificateKind kind, std::string via = {}) {
    if (v.status == AmeStatus::nonexistent) return;
    v.status = AmeStatus::nonexistent;
    v.certificate = kind;
    v.via = std::move(via);
  };
  auto done = [&] { return v.status == AmeStatus::nonexistent && !opts.run_all; };

  v.split = split_profile(profile);
  if (v.split && v.split->d1 <= v.split->d2 * v.split->d2) {
    v.closed_form_min_n = corollary7_threshold(v.split->d1, v.split->d2);
    if (v.split->n >= *v.closed_form_min_n) {
      auto subset = closed_form_subset(profile, *v.split);
      Rat lhs = scott_check(profile, subset);
      if (lhs < 0) {
        v.scott = ScottWitness{std::move(subset), std::move(lhs)};
        certify(CertificateKind::scott_witness, "closed-form");
      }
    }
  }

  if (!done() && !v.scott) {
    v.scott_searched = true;
    v.scott = scott_search(profile, opts.budget);
    if (v.scott) certify(CertificateKind::scott_witness, "subset-search");
  }

  if (!done() && profile.parties() % 2 == 1) {
    v.shadow = hetero_shadow(profile);
    v.shadow_index = v.shadow->first_negative();
    if (v.shadow_index) certify(CertificateKind::shadow_negative);
  }
  return v;
}

}  // namespace kuniform
