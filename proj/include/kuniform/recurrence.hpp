#pragma once

// Verification of the three-term recurrences satisfied by the d = 3 alpha
// sums. The coefficient polynomials are static data; this header evaluates
// them exactly and checks them against direct summation.

#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kuniform/exact.hpp"

namespace kuniform {

/// Integer polynomial in n, coefficients in ascending powers.
struct IntPolynomial {
  std::vector<BigInt> coeffs;

  [[nodiscard]] BigInt operator()(long n) const {
    BigInt acc(0);
    const BigInt x(n);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
};

/// Product of integer polynomials, kept factored as published.
struct FactoredPolynomial {
  std::vector<IntPolynomial> factors;

  [[nodiscard]] BigInt operator()(long n) const {
    BigInt acc(1);
    for (const auto& f : factors) acc *= f(n);
    return acc;
  }
};

/// H2(n) p(n+2) = H1(n) p(n+1) + H0(n) p(n) for the offset `ell`.
struct RecurrenceSpec {
  int ell = 0;
  FactoredPolynomial lead;    // H2
  FactoredPolynomial middle;  // H1
  FactoredPolynomial tail;    // H0
  std::vector<std::pair<int, BigInt>> initial_terms;
  std::optional<int> positive_from;
};

/// 0, 1, 2 for ell in [-4,-1], [0,4], [5,9].
inline int recurrence_bucket(int ell) {
  if (ell < -4 || ell > 9) throw std::out_of_range("ell outside -4..9");
  return ell < 0 ? 0 : (ell <= 4 ? 1 : 2);
}

/// p(n) = sum_{j=0}^{3n-1+2b} (-2)^j C(n+ell-4b+j, n+ell-4b) C(6n-2+4b-j, 3n-1+2b),
/// with extended binomials so small n follow the summation convention.
inline BigInt recurrence_term(int ell, long n) {
  const long b = recurrence_bucket(ell);
  const long low = n + ell - 4 * b;
  const long top = 3 * n - 1 + 2 * b;
  BigInt sum(0);
  BigInt power(1);
  for (long j = 0; j <= top; ++j) {
    sum += power * binom_ext(low + j, low) * binom_ext(6 * n - 2 + 4 * b - j, top);
    power *= -2;
  }
  return sum;
}

namespace detail {

inline IntPolynomial parse_factor_token(const std::string& tok) {
  IntPolynomial p;
  std::istringstream in(tok);
  std::string c;
  while (in >> c) p.coeffs.emplace_back(c, 10);
  if (p.coeffs.empty()) throw std::invalid_argument("empty polynomial factor");
  return p;
}

inline FactoredPolynomial parse_factored(const std::string& rest) {
  FactoredPolynomial fp;
  std::size_t i = 0;
  while (i < rest.size()) {
    if (rest[i] == ' ' || rest[i] == '\t') {
      ++i;
    } else if (rest[i] == '[') {
      const auto close = rest.find(']', i);
      if (close == std::string::npos) throw std::invalid_argument("unterminated '[' in polynomial");
      fp.factors.push_back(parse_factor_token(rest.substr(i + 1, close - i - 1)));
      i = close + 1;
    } else {
      auto end = rest.find_first_of(" \t[", i);
      if (end == std::string::npos) end = rest.size();
      fp.factors.push_back(parse_factor_token(rest.substr(i, end - i)));
      i = end;
    }
  }
  if (fp.factors.empty()) throw std::invalid_argument("polynomial with no factors");
  return fp;
}

}  // namespace detail

/// Reads blocks of the form
///   ell <int>
///   init <n> <p(n)>        (optional, repeatable)
///   positive_from <n>      (optional)
///   h2 <factors>
///   h1 <factors>
///   h0 <factors>
/// Blank lines and '#' comments are ignored.
inline std::vector<RecurrenceSpec> parse_recurrence_specs(std::istream& in) {
  std::vector<RecurrenceSpec> specs;
  struct Seen {
    bool h2 = false, h1 = false, h0 = false;
  };
  std::vector<Seen> seen;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("recurrence data line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "ell") {
      RecurrenceSpec s;
      if (!(ls >> s.ell)) fail("bad ell");
      specs.push_back(std::move(s));
      seen.emplace_back();
      continue;
    }
    if (specs.empty()) fail("'" + key + "' before any 'ell'");
    auto& s = specs.back();
    if (key == "init") {
      int n;
      std::string v;
      if (!(ls >> n >> v)) fail("bad init");
      s.initial_terms.emplace_back(n, BigInt(v, 10));
    } else if (key == "positive_from") {
      int n;
      if (!(ls >> n)) fail("bad positive_from");
      s.positive_from = n;
    } else if (key == "h2" || key == "h1" || key == "h0") {
      std::string rest;
      std::getline(ls, rest);
      auto fp = detail::parse_factored(rest);
      if (key == "h2") {
        s.lead = std::move(fp);
        seen.back().h2 = true;
      } else if (key == "h1") {
        s.middle = std::move(fp);
        seen.back().h1 = true;
      } else {
        s.tail = std::move(fp);
        seen.back().h0 = true;
      }
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  for (std::size_t i = 0; i < specs.size(); ++i)
    if (!seen[i].h2 || !seen[i].h1 || !seen[i].h0)
      throw std::invalid_argument("recurrence for ell=" + std::to_string(specs[i].ell) + " is missing a coefficient");
  return specs;
}

struct RecurrenceReport {
  int ell = 0;
  int n_max = 0;
  std::vector<int> violations;          // n where H2 p(n+2) != H1 p(n+1) + H0 p(n)
  std::vector<int> initial_mismatches;  // listed p(n) differing from direct summation
  std::vector<int> positivity_failures; // n >= positive_from with a coefficient <= 0
  /// Smallest n0 such that all three coefficients are positive on [n0, n_max].
  std::optional<int> positivity_threshold;

  [[nodiscard]] bool passed() const {
    return violations.empty() && initial_mismatches.empty() && positivity_failures.empty();
  }
};

/// Checks the recurrence exactly for 1 <= n <= n_max using directly summed p(n).
inline RecurrenceReport verify_recurrence(const RecurrenceSpec& spec, int n_max) {
  if (n_max < 1) throw std::out_of_range("n_max must be positive");
  RecurrenceReport r;
  r.ell = spec.ell;
  r.n_max = n_max;

  std::vector<BigInt> p(static_cast<std::size_t>(n_max) + 3);
  for (int n = 1; n <= n_max + 2; ++n) p[n] = recurrence_term(spec.ell, n);

  for (const auto& [n, value] : spec.initial_terms) {
    const BigInt direct = (n >= 1 && n <= n_max + 2) ? p[n] : recurrence_term(spec.ell, n);
    if (direct != value) r.initial_mismatches.push_back(n);
  }

  std::vector<bool> positive(static_cast<std::size_t>(n_max) + 1, false);
  for (int n = 1; n <= n_max; ++n) {
    const BigInt h2 = spec.lead(n), h1 = spec.middle(n), h0 = spec.tail(n);
    if (h2 * p[n + 2] != h1 * p[n + 1] + h0 * p[n]) r.violations.push_back(n);
    positive[n] = h2 > 0 && h1 > 0 && h0 > 0;
    if (spec.positive_from && n >= *spec.positive_from && !positive[n]) r.positivity_failures.push_back(n);
  }
  for (int n = n_max; n >= 1 && positive[n]; --n) r.positivity_threshold = n;
  return r;
}

}  // namespace kuniform
