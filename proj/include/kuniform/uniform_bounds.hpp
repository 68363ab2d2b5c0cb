#pragma once

// Upper bounds on the uniformity k of k-uniform states in (C^d)^{(x)N}.
//
// Setting a_0 = 1 and a_1 = ... = a_{N/2} = 0 in the invariant-basis expansion
// fixes c_i = alpha_i(N). Every shadow coefficient is nonnegative, so the b -> c
// inverse forces (-1)^i c_i >= 0; any index violating that caps k.

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kuniform/enumerators.hpp"
#include "kuniform/errors.hpp"
#include "kuniform/exact.hpp"

namespace kuniform {

inline void require_alpha_index(int n, int d, int i) {
  if (n < 1 || d < 2) throw std::out_of_range("alpha: need N >= 1 and d >= 2");
  if (i < 0 || i > n / 2) throw std::out_of_range("alpha: index outside 0..N/2");
}

/// alpha_0 = 1; alpha_i = -(N(d-1)/i) sum_{j<i} (1-d)^j C(N-2i+j, N-2i) C(2i-2-j, i-1).
inline Rat alpha_closed_form(int n, int d, int i) {
  require_alpha_index(n, d, i);
  if (i == 0) return Rat(1);
  BigInt sum(0);
  BigInt power(1);
  const BigInt base(1 - d);
  for (int j = 0; j < i; ++j) {
    sum += power * binom(n - 2 * i + j, n - 2 * i) * binom(2 * i - 2 - j, i - 1);
    power *= base;
  }
  Rat r(BigInt(-static_cast<long>(n) * (d - 1)) * sum, BigInt(i));
  r.canonicalize();
  return r;
}

/// alpha_0..alpha_{N/2} from the closed form.
inline std::vector<Rat> alpha_vector(int n, int d) {
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(n / 2) + 1);
  for (int i = 0; i <= n / 2; ++i) out.push_back(alpha_closed_form(n, d, i));
  return out;
}

/// Independent route: forward-solve the triangular system with
/// a = (1, 0, ..., 0) and read off c_i.
inline Rat alpha_oracle(int n, int d, int i) {
  require_alpha_index(n, d, i);
  std::vector<Rat> a(static_cast<std::size_t>(n) + 1, Rat(0));
  a[0] = 1;
  return a_to_c(WeightEnumerator(n, d, std::move(a)))[static_cast<std::size_t>(i)];
}

/// Known non-existence of AME states, k <= floor(N/2) - 1.
class AmeNonexistenceTable {
 public:
  struct Entry {
    int d;
    std::vector<int> n_values;
    const char* source;
  };

  [[nodiscard]] bool contains(int d, int n) const {
    // Qubits: N = 4 and every N >= 8 follow from Rains' bound.
    if (d == 2) return n == 4 || n >= 8;
    for (const auto& e : entries_)
      if (e.d == d) return std::find(e.n_values.begin(), e.n_values.end(), n) != e.n_values.end();
    return false;
  }

  [[nodiscard]] const std::vector<Entry>& entries() const noexcept { return entries_; }

  static const AmeNonexistenceTable& known() {
    static const AmeNonexistenceTable table;
    return table;
  }

 private:
  std::vector<Entry> entries_{
      {2, {4, 8}, "Rains (1999); every N >= 8 as well"},
      {3, {8, 12, 13, 14, 16, 17, 19, 21, 23}, "Huber, Eltschka, Siewert, Guehne (2018)"},
      {4, {12, 16, 20, 24, 25, 26, 28, 29, 30, 33, 37, 39}, "Huber, Eltschka, Siewert, Guehne (2018)"},
      {5, {28, 32, 36, 40, 44, 48}, "Huber, Eltschka, Siewert, Guehne (2018)"},
  };
};

/// Scott's condition for AME non-existence: N > 2(d^2-1) (N even) or
/// N > 2d(d+1)-1 (N odd).
inline bool scott_condition(int n, int d) {
  const long dd = d;
  return n % 2 == 0 ? n > 2 * (dd * dd - 1) : n > 2 * dd * (dd + 1) - 1;
}

/// Rains' qubit bound for N = 6m + l: 2m + 1 if l < 5, else 2m + 2.
inline int rains_bound(int n) {
  if (n < 0) throw std::out_of_range("rains_bound: negative N");
  const int m = n / 6;
  return n % 6 == 5 ? 2 * m + 2 : 2 * m + 1;
}

enum class Provenance { alpha_sign, alpha_vanishing, ame_table, scott, trivial };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::alpha_sign: return "alpha-sign";
    case Provenance::alpha_vanishing: return "alpha-vanishing";
    case Provenance::ame_table: return "ame-nonexistence-table";
    case Provenance::scott: return "scott";
    case Provenance::trivial: return "trivial-schmidt";
  }
  return "?";
}

struct BoundVerdict {
  int n = 0;
  int d = 0;
  int k_max = 0;
  Provenance provenance = Provenance::trivial;
  /// alpha-sign: the violating index i. alpha-vanishing: the first index after
  /// the vanishing one whose alpha is nonzero.
  std::optional<int> alpha_index;
  std::optional<Rat> witness;  // alpha at alpha_index
  std::optional<int> vanishing_index;
};

struct BoundOptions {
  bool use_ame_table = true;
  bool use_scott = true;
};

/// Tightest bound among: the trivial floor(N/2); i-1 for the smallest i with
/// (-1)^i alpha_i < 0; i'-1 when alpha_i = 0 and i' > i is the next nonzero
/// alpha (c_i = 0 forces b_0..b_{p-i} = 0, hence c_{i'} = 0); floor(N/2)-1 from
/// the AME table or Scott's condition. Ties go to the earliest of that order.
inline BoundVerdict k_upper_bound(int n, int d, const BoundOptions& opts = {}) {
  if (n < 2 || d < 2) throw std::out_of_range("k_upper_bound: need N >= 2 and d >= 2");
  const int p = n / 2;
  const auto alpha = alpha_vector(n, d);

  BoundVerdict v;
  v.n = n;
  v.d = d;
  v.k_max = p;
  v.provenance = Provenance::trivial;

  for (int i = 1; i <= p; ++i) {
    const int s = sign(alpha[i]) * (i % 2 == 0 ? 1 : -1);
    if (s < 0) {
      v.k_max = i - 1;
      v.provenance = Provenance::alpha_sign;
      v.alpha_index = i;
      v.witness = alpha[i];
      break;
    }
  }

  for (int i = 1; i <= p; ++i) {
    if (alpha[i] != 0) continue;
    int next = i + 1;
    while (next <= p && alpha[next] == 0) ++next;
    if (next <= p && next - 1 < v.k_max) {
      v.k_max = next - 1;
      v.provenance = Provenance::alpha_vanishing;
      v.alpha_index = next;
      v.witness = alpha[next];
      v.vanishing_index = i;
    }
    break;
  }

  if (opts.use_ame_table && p - 1 < v.k_max && AmeNonexistenceTable::known().contains(d, n)) {
    v.k_max = p - 1;
    v.provenance = Provenance::ame_table;
    v.alpha_index.reset();
    v.witness.reset();
    v.vanishing_index.reset();
  }
  if (opts.use_scott && p - 1 < v.k_max && scott_condition(n, d)) {
    v.k_max = p - 1;
    v.provenance = Provenance::scott;
    v.alpha_index.reset();
    v.witness.reset();
    v.vanishing_index.reset();
  }
  return v;
}

/// Closed-form range bound for d = 3, N >= 10 except N = 23, 37, 51:
/// 6m-1 on [14m-4, 14m-1], 6m+1 on [14m, 14m+4], 6m+3 on [14m+5, 14m+9].
inline int theorem4_formula(int n) {
  if (n < 10) throw not_applicable_error("d=3 range formula needs N >= 10");
  if (n == 23 || n == 37 || n == 51) throw not_applicable_error("N=" + std::to_string(n) + " is excepted");
  const int m = (n + 4) / 14;
  const int offset = n - 14 * m;
  if (offset <= -1) return 6 * m - 1;
  if (offset <= 4) return 6 * m + 1;
  return 6 * m + 3;
}

/// The d = 3 family behind the range formula: N = 14m + ell, the decisive
/// alpha index is 6m, 6m+2 or 6m+4 for ell in [-4,-1], [0,4], [5,9].
inline int d3_range_alpha_index(int m, int ell) {
  if (ell < -4 || ell > 9) throw std::out_of_range("ell outside -4..9");
  if (ell < 0) return 6 * m;
  if (ell <= 4) return 6 * m + 2;
  return 6 * m + 4;
}

/// Conjectured range bounds for d = 4 (m >= 2, N != 38) and d = 5 (m >= 45).
/// Empty when N lies outside the formula's domain.
inline std::optional<int> conjecture_formula(int d, int n) {
  if (d == 4) {
    // N in [17m-12, 17m+4] for m >= 2.
    if (n < 22) return std::nullopt;
    const int m = (n + 12) / 17;
    const int offset = n - 17 * m;
    if (offset <= -9) return 8 * m - 5;
    if (offset <= -5) return 8 * m - 3;
    if (offset <= -1) return 8 * m - 1;
    return 8 * m + 1;
  }
  if (d == 5) {
    if (n < 180) return std::nullopt;
    return 2 * (n / 4) - 1;
  }
  throw std::out_of_range("conjecture formula defined for d in {4, 5}");
}

inline bool conjecture_exception(int d, int n) { return d == 4 && n == 38; }

struct ConjectureRow {
  int n;
  std::optional<int> formula;
  int computed;
  bool agree;       // formula == computed
  bool consistent;  // computed <= formula: the method does not contradict the formula
  bool exception;
};

/// Tabulates the conjectured formula against the computed bound. Never asserts.
inline std::vector<ConjectureRow> conjecture_scan(int d, int n_lo, int n_hi) {
  if (d != 4 && d != 5) throw std::out_of_range("conjecture scan defined for d in {4, 5}");
  std::vector<ConjectureRow> rows;
  for (int n = std::max(n_lo, 2); n <= n_hi; ++n) {
    const auto f = conjecture_formula(d, n);
    const int k = k_upper_bound(n, d).k_max;
    rows.push_back({n, f, k, f.has_value() && *f == k, f.has_value() && k <= *f, conjecture_exception(d, n)});
  }
  return rows;
}

}  // namespace kuniform
