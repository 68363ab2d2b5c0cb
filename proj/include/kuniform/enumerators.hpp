#pragma once

// Weight-enumerator algebra for homogeneous N-partite systems with local
// dimension d.
//
// A degree-N homogeneous polynomial P(x, y) = sum_j p_j x^(N-j) y^j is stored
// as its coefficient vector (p_0, ..., p_N). Substitutions are carried out by
// exact binomial expansion and convolution of the substituted linear forms.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kuniform/exact.hpp"

namespace kuniform {

namespace detail {

inline void require_system(int n, int d) {
  if (n < 1) throw std::invalid_argument("number of parties must be positive");
  if (d < 2) throw std::invalid_argument("local dimension must be at least 2");
}

/// Coefficient record tagged by what the coefficients mean. `Length` maps N to
/// the required vector length.
template <class Tag, std::size_t (*Length)(int)>
class CoefficientRecord {
 public:
  CoefficientRecord(int n, int d, std::vector<Rat> coeffs) : n_(n), d_(d), coeffs_(std::move(coeffs)) {
    require_system(n, d);
    if (coeffs_.size() != Length(n))
      throw std::invalid_argument("expected " + std::to_string(Length(n)) + " coefficients for N=" +
                                  std::to_string(n) + ", got " + std::to_string(coeffs_.size()));
  }

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] int d() const noexcept { return d_; }
  [[nodiscard]] const std::vector<Rat>& coeffs() const& noexcept { return coeffs_; }
  [[nodiscard]] std::vector<Rat> coeffs() && noexcept { return std::move(coeffs_); }
  [[nodiscard]] const Rat& operator[](std::size_t i) const { return coeffs_.at(i); }

  friend bool operator==(const CoefficientRecord& a, const CoefficientRecord& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int n_;
  int d_;
  std::vector<Rat> coeffs_;
};

inline std::size_t full_length(int n) { return static_cast<std::size_t>(n) + 1; }
inline std::size_t half_length(int n) { return static_cast<std::size_t>(n / 2) + 1; }

struct weight_tag {};
struct shadow_tag {};
struct basis_tag {};
struct compressed_tag {};

}  // namespace detail

/// Shor-Laflamme enumerator A(x, y) = sum_j a_j x^(N-j) y^j.
using WeightEnumerator = detail::CoefficientRecord<detail::weight_tag, detail::full_length>;
/// Shadow enumerator S(x, y) = sum_j s_j x^(N-j) y^j.
using ShadowEnumerator = detail::CoefficientRecord<detail::shadow_tag, detail::full_length>;
/// Coordinates c_0..c_{N/2} of A in the basis (x+(d-1)y)^(N-2i) (y(x-y))^i.
using InvariantBasisCoeffs = detail::CoefficientRecord<detail::basis_tag, detail::half_length>;
/// Nonvanishing shadow coefficients b_j = s_{2j+t}, t = N mod 2.
using ShadowCompressed = detail::CoefficientRecord<detail::compressed_tag, detail::half_length>;

inline int parity(int n) { return n % 2; }

/// The linear form cx * x + cy * y.
struct LinearForm {
  Rat cx;
  Rat cy;
};

/// Coefficients of (cx x + cy y)^m in the y-power convention: entry t is the
/// coefficient of x^(m-t) y^t.
inline std::vector<Rat> expand_power(const LinearForm& form, int m) {
  std::vector<Rat> out(static_cast<std::size_t>(m) + 1);
  std::vector<Rat> px(out.size()), py(out.size());
  px[0] = 1;
  py[0] = 1;
  for (std::size_t t = 1; t < out.size(); ++t) {
    px[t] = px[t - 1] * form.cx;
    py[t] = py[t - 1] * form.cy;
  }
  for (int t = 0; t <= m; ++t) {
    Rat b(binom(m, t));
    out[t] = b * px[m - t] * py[t];
  }
  return out;
}

inline std::vector<Rat> convolve(std::span<const Rat> a, std::span<const Rat> b) {
  std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// Coefficients of P(x_image, y_image) for homogeneous P of degree coeffs.size()-1.
inline std::vector<Rat> substitute(std::span<const Rat> coeffs, const LinearForm& x_image,
                                   const LinearForm& y_image) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<Rat> out(coeffs.size(), Rat(0));
  for (int j = 0; j <= n; ++j) {
    if (coeffs[j] == 0) continue;
    const auto term = convolve(expand_power(x_image, n - j), expand_power(y_image, j));
    for (int t = 0; t <= n; ++t) out[t] += coeffs[j] * term[t];
  }
  return out;
}

/// A((x + (d^2-1) y)/d, (x - y)/d).
inline WeightEnumerator macwilliams_transform(const WeightEnumerator& a) {
  const Rat d(a.d());
  const LinearForm xs{1 / d, (d * d - 1) / d};
  const LinearForm ys{1 / d, -1 / d};
  return {a.n(), a.d(), substitute(a.coeffs(), xs, ys)};
}

/// S(x, y) = A(((d-1) x + (d+1) y)/d, (y - x)/d).
inline ShadowEnumerator shadow_transform(const WeightEnumerator& a) {
  const Rat d(a.d());
  const LinearForm xs{(d - 1) / d, (d + 1) / d};
  const LinearForm ys{-1 / d, 1 / d};
  return {a.n(), a.d(), substitute(a.coeffs(), xs, ys)};
}

/// Coefficients of the i-th invariant basis polynomial
/// (x + (d-1) y)^(N-2i) (y (x - y))^i. Its lowest y-power is y^i with
/// coefficient 1.
inline std::vector<Rat> invariant_basis_polynomial(int n, int d, int i) {
  auto head = expand_power(LinearForm{Rat(1), Rat(d - 1)}, n - 2 * i);
  std::vector<Rat> tail(static_cast<std::size_t>(2 * i) + 1, Rat(0));
  const auto xy = expand_power(LinearForm{Rat(1), Rat(-1)}, i);
  for (int t = 0; t <= i; ++t) tail[i + t] = xy[t];
  return convolve(head, tail);
}

/// Expands sum_i c_i (x + (d-1) y)^(N-2i) (y (x - y))^i.
inline WeightEnumerator c_to_a(const InvariantBasisCoeffs& c) {
  const int n = c.n();
  std::vector<Rat> a(static_cast<std::size_t>(n) + 1, Rat(0));
  for (int i = 0; i <= n / 2; ++i) {
    if (c[i] == 0) continue;
    const auto basis = invariant_basis_polynomial(n, c.d(), i);
    for (int t = 0; t <= n; ++t) a[t] += c[i] * basis[t];
  }
  return {n, c.d(), std::move(a)};
}

/// Forward substitution on the unitriangular system matching a_0..a_{N/2};
/// the remaining coefficients of `a` are not consulted.
inline InvariantBasisCoeffs a_to_c(const WeightEnumerator& a) {
  const int n = a.n();
  const int p = n / 2;
  std::vector<std::vector<Rat>> basis;
  basis.reserve(static_cast<std::size_t>(p) + 1);
  for (int i = 0; i <= p; ++i) basis.push_back(invariant_basis_polynomial(n, a.d(), i));

  std::vector<Rat> c(static_cast<std::size_t>(p) + 1, Rat(0));
  for (int j = 0; j <= p; ++j) {
    Rat v = a[j];
    for (int i = 0; i < j; ++i) v -= c[i] * basis[i][j];
    c[j] = v;
  }
  return {n, a.d(), std::move(c)};
}

/// b_j = sum_{m=0}^{j} 2^(2m+t) d^-(p-m) C(p-m, p-j) (-1)^(p-j) c_{p-m}, p = N/2.
inline ShadowCompressed c_to_b(const InvariantBasisCoeffs& c) {
  const int n = c.n();
  const int p = n / 2;
  const int t = parity(n);
  const Rat d(c.d());
  std::vector<Rat> b(static_cast<std::size_t>(p) + 1, Rat(0));
  for (int j = 0; j <= p; ++j) {
    Rat sum(0);
    for (int m = 0; m <= j; ++m) {
      Rat term = pow_int(Rat(2), 2 * m + t) * pow_int(d, -(p - m)) * Rat(binom(p - m, p - j)) * c[p - m];
      sum += term;
    }
    b[j] = ((p - j) % 2 == 0) ? sum : Rat(-sum);
  }
  return {n, c.d(), std::move(b)};
}

/// c_i = (-1)^i 2^(2i-N) d^i sum_{j=0}^{p-i} C(p-j, i) b_j; inverse of c_to_b.
inline InvariantBasisCoeffs b_to_c(const ShadowCompressed& b) {
  const int n = b.n();
  const int p = n / 2;
  const Rat d(b.d());
  std::vector<Rat> c(static_cast<std::size_t>(p) + 1, Rat(0));
  for (int i = 0; i <= p; ++i) {
    Rat sum(0);
    for (int j = 0; j <= p - i; ++j) sum += Rat(binom(p - j, i)) * b[j];
    Rat scale = pow_int(Rat(2), 2 * i - n) * pow_int(d, i);
    c[i] = (i % 2 == 0) ? Rat(scale * sum) : Rat(-scale * sum);
  }
  return {n, b.d(), std::move(c)};
}

/// Keeps s_{2j+t}. Throws if any dropped coefficient is nonzero.
inline ShadowCompressed compress(const ShadowEnumerator& s) {
  const int n = s.n();
  const int t = parity(n);
  std::vector<Rat> b;
  for (int idx = 0; idx <= n; ++idx) {
    if ((idx - t) % 2 == 0) {
      b.push_back(s[idx]);
    } else if (s[idx] != 0) {
      throw std::invalid_argument("shadow coefficient s_" + std::to_string(idx) +
                                  " must vanish to compress");
    }
  }
  return {n, s.d(), std::move(b)};
}

inline ShadowEnumerator expand(const ShadowCompressed& b) {
  const int n = b.n();
  const int t = parity(n);
  std::vector<Rat> s(static_cast<std::size_t>(n) + 1, Rat(0));
  for (int j = 0; j <= n / 2; ++j) s[2 * j + t] = b[j];
  return {n, b.d(), std::move(s)};
}

struct ConstraintCheck {
  std::string name;
  bool passed;
  std::string detail;  // first offending index, empty when passed
};

struct ConstraintReport {
  std::vector<ConstraintCheck> checks;

  [[nodiscard]] bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  [[nodiscard]] const ConstraintCheck* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Checks the constraints every pure-state enumerator satisfies, plus
/// a_1 = ... = a_k = 0 when `k` is given. Violations are report entries.
inline ConstraintReport validate_state_constraints(const WeightEnumerator& a, std::optional<int> k = std::nullopt) {
  ConstraintReport report;
  const int n = a.n();
  auto add = [&](std::string name, std::optional<int> bad) {
    report.checks.push_back(
        {std::move(name), !bad.has_value(), bad ? "index " + std::to_string(*bad) : std::string()});
  };

  add("a0_equals_one", a[0] == 1 ? std::nullopt : std::optional<int>(0));

  std::optional<int> neg;
  for (int j = 0; j <= n && !neg; ++j)
    if (a[j] < 0) neg = j;
  add("a_nonnegative", neg);

  const auto mw = macwilliams_transform(a);
  std::optional<int> mw_bad;
  for (int j = 0; j <= n && !mw_bad; ++j)
    if (mw[j] != a[j]) mw_bad = j;
  add("macwilliams_invariant", mw_bad);

  const auto s = shadow_transform(a);
  std::optional<int> s_neg;
  for (int j = 0; j <= n && !s_neg; ++j)
    if (s[j] < 0) s_neg = j;
  add("shadow_nonnegative", s_neg);

  std::optional<int> s_odd;
  for (int j = 1; j <= n && !s_odd; j += 2)
    if (s[n - j] != 0) s_odd = n - j;
  add("shadow_odd_vanishing", s_odd);

  if (k) {
    if (*k < 0 || *k > n) throw std::out_of_range("uniformity k out of range");
    std::optional<int> nz;
    for (int j = 1; j <= *k && !nz; ++j)
      if (a[j] != 0) nz = j;
    add("k_uniform_zeros", nz);
  }
  return report;
}

}  // namespace kuniform
