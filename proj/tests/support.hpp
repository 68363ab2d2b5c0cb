#pragma once

// Independent reference computations and random generators for the tests.

#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kuniform/kuniform.hpp"

namespace kt {

using kuniform::BigInt;
using kuniform::Rat;

inline constexpr std::uint64_t kSeed = 0x6b756e69666f726dULL;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(kSeed);
  return gen;
}

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rat random_rat(int num_span = 20, int den_max = 12) {
  return kuniform::make_rat(uniform_int(-num_span, num_span), uniform_int(1, den_max));
}

inline std::vector<Rat> random_rats(std::size_t n, int num_span = 20, int den_max = 12) {
  std::vector<Rat> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_rat(num_span, den_max));
  return out;
}

/// Additive Pascal triangle rows 0..n_max.
inline std::vector<std::vector<BigInt>> pascal(int n_max) {
  std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    rows[n].assign(static_cast<std::size_t>(n) + 1, BigInt(1));
    for (int k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
  }
  return rows;
}

/// e_k by summing over every k-subset bitmask.
inline Rat elem_sym_subsets(const std::vector<Rat>& v, int k) {
  Rat total(0);
  const auto n = static_cast<unsigned>(v.size());
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (std::popcount(m) != k) continue;
    Rat prod(1);
    for (unsigned i = 0; i < n; ++i)
      if (m >> i & 1u) prod *= v[i];
    total += prod;
  }
  return total;
}

/// Evaluates sum_j c_j x^{N-j} y^j at a point.
inline Rat eval_homogeneous(const std::vector<Rat>& c, const Rat& x, const Rat& y) {
  const int n = static_cast<int>(c.size()) - 1;
  Rat total(0);
  for (int j = 0; j <= n; ++j) total += c[j] * kuniform::pow_int(x, n - j) * kuniform::pow_int(y, j);
  return total;
}

/// Nonzero rational avoiding the special value 0 for pow_int with negative exponents.
inline Rat random_point() {
  Rat r;
  do r = random_rat(9, 7);
  while (r == 0);
  return r;
}

inline std::string fixture(const std::string& name) { return std::string(KUNIFORM_FIXTURE_DIR) + "/" + name; }

}  // namespace kt
