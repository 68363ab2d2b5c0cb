#pragma once

// Exact arithmetic shared by every module: arbitrary-precision integers and
// rationals (GMP-backed), Gaussian rationals, binomials and elementary
// symmetric polynomials.

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kuniform {

using BigInt = mpz_class;
/// Always held in canonical form: gcd(|num|, den) = 1 and den > 0. gmpxx keeps
/// results of arithmetic canonical; anything built from raw parts goes through
/// make_rat().
using Rat = mpq_class;

inline Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(BigInt(num), BigInt(den)); }

inline int sign(const Rat& r) { return sgn(r); }
inline int sign(const BigInt& z) { return sgn(z); }

/// base^exp for any integer exponent; a negative exponent inverts the base.
inline Rat pow_int(const Rat& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw std::domain_error("zero raised to a negative power");
    Rat inv = 1 / base;
    return pow_int(inv, -exp);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exp));
  Rat r(num, den);
  return r;  // already canonical: powers of coprime integers stay coprime
}

inline BigInt pow_int(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

/// C(n, k) for n >= 0. Zero outside 0 <= k <= n; C(0, 0) = 1.
inline BigInt binom(long n, long k) {
  if (n < 0) throw std::domain_error("binom: negative upper argument");
  if (k < 0 || k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// Binomial extended to negative integer arguments by
/// C(n, k) = (-1)^k C(k - n - 1, k) for n < 0 <= k and
/// C(n, k) = (-1)^(n-k) C(-k - 1, n - k) for k <= n < 0, zero otherwise.
/// This is the convention computer-algebra systems use for summation
/// recurrences; in particular C(-1, -1) = 1.
inline BigInt binom_ext(long n, long k) {
  if (n >= 0) return binom(n, k);
  if (k >= 0) {
    BigInt r = binom(k - n - 1, k);
    return (k % 2 == 0) ? r : BigInt(-r);
  }
  if (k <= n) {
    BigInt r = binom(-k - 1, n - k);
    return ((n - k) % 2 == 0) ? r : BigInt(-r);
  }
  return BigInt(0);
}

/// All elementary symmetric polynomials e_0..e_n of `values`, by the O(n^2)
/// product-expansion recurrence.
inline std::vector<Rat> elem_sym_all(std::span<const Rat> values) {
  std::vector<Rat> e(values.size() + 1, Rat(0));
  e[0] = 1;
  for (std::size_t m = 0; m < values.size(); ++m) {
    for (std::size_t j = m + 1; j >= 1; --j) e[j] += values[m] * e[j - 1];
  }
  return e;
}

/// e_k(values); O(n*k).
inline Rat elem_sym(std::span<const Rat> values, std::size_t k) {
  if (k > values.size()) throw std::out_of_range("elem_sym: k exceeds the number of values");
  std::vector<Rat> e(k + 1, Rat(0));
  e[0] = 1;
  for (std::size_t m = 0; m < values.size(); ++m) {
    const std::size_t top = std::min(k, m + 1);
    for (std::size_t j = top; j >= 1; --j) e[j] += values[m] * e[j - 1];
  }
  return e[k];
}

/// Canonical text form "p/q"; integers are written with an explicit "/1".
inline std::string to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts "p/q" or "p" with an optional sign on p. No decimals, no spaces.
inline Rat parse_rat(std::string_view text) {
  auto is_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num, true) || !is_int(den, false))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  std::string num_s(num);
  if (num_s[0] == '+') num_s.erase(0, 1);
  BigInt n(num_s, 10);
  BigInt d(std::string(den), 10);
  return make_rat(n, d);
}

/// Exact complex number with rational parts.
struct GaussRat {
  Rat re{0};
  Rat im{0};

  GaussRat() = default;
  GaussRat(Rat r, Rat i = Rat(0)) : re(std::move(r)), im(std::move(i)) {}

  [[nodiscard]] GaussRat conj() const { return {re, -im}; }
  /// |z|^2
  [[nodiscard]] Rat norm2() const { return re * re + im * im; }
  [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }

  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    Rat r = a.re * b.re - a.im * b.im;
    Rat i = a.re * b.im + a.im * b.re;
    return {std::move(r), std::move(i)};
  }
  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
};

}  // namespace kuniform
