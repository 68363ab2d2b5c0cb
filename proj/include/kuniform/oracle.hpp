#pragma once

// Brute-force ground truth on explicit small states. Everything is computed
// from exact reduced purities Tr(rho_S^2), so no operator basis is built.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kuniform/enumerators.hpp"
#include "kuniform/errors.hpp"
#include "kuniform/exact.hpp"
#include "kuniform/hetero.hpp"

namespace kuniform {

struct OracleLimits {
  std::uint64_t hilbert_cap = 4096;
  int shadow_max_parties = 12;
};

using Ket = std::vector<int>;

/// Pure state with unnormalized Gaussian-rational amplitudes. Every derived
/// quantity is divided by the matching power of the squared norm.
class PureState {
 public:
  PureState(DimensionProfile profile, std::map<Ket, GaussRat> amplitudes)
      : profile_(std::move(profile)), amps_(std::move(amplitudes)) {
    for (auto it = amps_.begin(); it != amps_.end();) {
      check_ket(it->first);
      it = it->second.is_zero() ? amps_.erase(it) : std::next(it);
    }
    if (amps_.empty()) throw std::invalid_argument("state has no nonzero amplitude");
    for (const auto& [ket, a] : amps_) norm2_ += a.norm2();
  }

  [[nodiscard]] const DimensionProfile& profile() const noexcept { return profile_; }
  [[nodiscard]] int parties() const noexcept { return profile_.parties(); }
  [[nodiscard]] const std::map<Ket, GaussRat>& amplitudes() const noexcept { return amps_; }
  [[nodiscard]] const Rat& norm2() const noexcept { return norm2_; }

 private:
  void check_ket(const Ket& ket) const {
    if (static_cast<int>(ket.size()) != profile_.parties())
      throw std::invalid_argument("ket length does not match the number of parties");
    for (std::size_t i = 0; i < ket.size(); ++i)
      if (ket[i] < 0 || ket[i] >= profile_[i]) throw std::out_of_range("ket label outside local dimension");
  }

  DimensionProfile profile_;
  std::map<Ket, GaussRat> amps_;
  Rat norm2_{0};
};

namespace detail {

inline void require_capacity(const PureState& psi, const OracleLimits& limits) {
  if (psi.parties() > 62 || psi.profile().total_dimension() > BigInt(std::to_string(limits.hilbert_cap), 10))
    throw capacity_error("Hilbert space dimension exceeds the cap of " + std::to_string(limits.hilbert_cap));
}

inline void require_shadow_capacity(int n, const OracleLimits& limits) {
  if (n > limits.shadow_max_parties)
    throw capacity_error("subset sums need N <= " + std::to_string(limits.shadow_max_parties));
}

inline void require_homogeneous(const PureState& psi) {
  if (!psi.profile().is_homogeneous())
    throw not_applicable_error("weight enumerators need equal local dimensions");
}

inline std::uint32_t to_mask(const PureState& psi, std::span<const int> subset) {
  std::uint32_t mask = 0;
  for (int i : subset) {
    if (i < 0 || i >= psi.parties()) throw std::out_of_range("subset index outside the parties");
    mask |= 1u << i;
  }
  return mask;
}

inline Rat purity_mask(const PureState& psi, std::uint32_t mask) {
  // Group amplitudes by their configuration on S^c; rho_S[x][x'] collects
  // a_{x,c} conj(a_{x',c}) over shared complements c.
  std::map<Ket, std::vector<std::pair<Ket, const GaussRat*>>> groups;
  for (const auto& [ket, a] : psi.amplitudes()) {
    Ket in, out;
    for (int i = 0; i < psi.parties(); ++i) (mask >> i & 1u ? in : out).push_back(ket[i]);
    groups[std::move(out)].emplace_back(std::move(in), &a);
  }
  std::map<std::pair<Ket, Ket>, GaussRat> rho;
  for (const auto& [c, members] : groups)
    for (const auto& [x, ax] : members)
      for (const auto& [y, ay] : members) rho[{x, y}] += *ax * ay->conj();
  Rat tr(0);
  for (const auto& [xy, v] : rho) tr += v.norm2();
  return tr / (psi.norm2() * psi.norm2());
}

}  // namespace detail

/// Tr(rho_S^2) of the normalized state; S holds 0-based party indices.
inline Rat purity(const PureState& psi, std::span<const int> subset, const OracleLimits& limits = {}) {
  detail::require_capacity(psi, limits);
  return detail::purity_mask(psi, detail::to_mask(psi, subset));
}

/// Tr(rho_S^2) for every S, indexed by bitmask (bit i = party i).
inline std::vector<Rat> purity_set(const PureState& psi, const OracleLimits& limits = {}) {
  detail::require_capacity(psi, limits);
  detail::require_shadow_capacity(psi.parties(), limits);
  const std::uint32_t full = 1u << psi.parties();
  std::vector<Rat> out(full);
  for (std::uint32_t m = 0; m < full; ++m) out[m] = detail::purity_mask(psi, m);
  return out;
}

/// Maximally mixed k-party reductions: Tr(rho_S^2) = 1/prod_{i in S} d_i for all |S| = k.
inline bool is_k_uniform(const PureState& psi, int k, const OracleLimits& limits = {}) {
  const int n = psi.parties();
  if (k < 0 || k > n / 2) throw std::out_of_range("k must lie in 0..floor(N/2)");
  detail::require_capacity(psi, limits);
  if (n > 31) throw capacity_error("too many parties");
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (std::popcount(m) != k) continue;
    BigInt prod(1);
    for (int i = 0; i < n; ++i)
      if (m >> i & 1u) prod *= psi.profile()[i];
    if (detail::purity_mask(psi, m) != Rat(BigInt(1), prod)) return false;
  }
  return true;
}

/// s_j = sum_{|T|=j} sum_S (-1)^{|S \ T|} P(S) for a purity vector P indexed by
/// bitmask. Evaluated one party at a time: for party i outside T the S-sum
/// contributes P(i not in S) - P(i in S), inside T the plain sum.
inline std::vector<Rat> shadow_from_purities(std::vector<Rat> p, int n) {
  if (n < 0 || n > 30 || p.size() != (std::size_t{1} << n))
    throw std::invalid_argument("purity vector must have 2^N entries");
  for (int i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t m = 0; m < p.size(); ++m) {
      if (m & bit) continue;
      Rat without = p[m], with = p[m | bit];
      p[m] = without - with;
      p[m | bit] = without + with;
    }
  }
  std::vector<Rat> s(static_cast<std::size_t>(n) + 1, Rat(0));
  for (std::size_t t = 0; t < p.size(); ++t) s[std::popcount(t)] += p[t];
  return s;
}

/// The literal double sum over (S, T); 4^N terms, kept as a check on the
/// factorized version.
inline std::vector<Rat> shadow_from_purities_direct(const std::vector<Rat>& p, int n) {
  if (n < 0 || n > 30 || p.size() != (std::size_t{1} << n))
    throw std::invalid_argument("purity vector must have 2^N entries");
  std::vector<Rat> s(static_cast<std::size_t>(n) + 1, Rat(0));
  for (std::size_t t = 0; t < p.size(); ++t)
    for (std::size_t m = 0; m < p.size(); ++m) {
      if (std::popcount(m & ~t) % 2) s[std::popcount(t)] -= p[m];
      else s[std::popcount(t)] += p[m];
    }
  return s;
}

/// Purities an AME state in the given profile would have: every reduction to
/// at most floor(N/2) parties is maximally mixed, and complements share
/// purities.
inline std::vector<Rat> ame_purity_profile(const DimensionProfile& profile) {
  const int n = profile.parties();
  if (n > 30) throw capacity_error("too many parties for a purity profile");
  std::vector<Rat> out(std::size_t{1} << n);
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t m = 0; m <= full; ++m) {
    const std::uint32_t side = std::popcount(m) <= n / 2 ? m : (full & ~m);
    BigInt prod(1);
    for (int i = 0; i < n; ++i)
      if (side >> i & 1u) prod *= profile[i];
    out[m] = Rat(BigInt(1), prod);
  }
  return out;
}

/// a_j = sum_{|T|=j} a'_T with a'_T = sum_{U subset T} (-1)^{|T \ U|} d^{|U|} Tr(rho_U^2).
inline WeightEnumerator direct_enumerator(const PureState& psi, const OracleLimits& limits = {}) {
  detail::require_homogeneous(psi);
  const int n = psi.parties();
  const int d = psi.profile()[0];
  auto g = purity_set(psi, limits);
  for (std::size_t m = 0; m < g.size(); ++m) g[m] *= pow_int(Rat(d), std::popcount(m));
  for (int i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t m = 0; m < g.size(); ++m)
      if (m & bit) g[m] -= g[m ^ bit];
  }
  std::vector<Rat> a(static_cast<std::size_t>(n) + 1, Rat(0));
  for (std::size_t t = 0; t < g.size(); ++t) a[std::popcount(t)] += g[t];
  return WeightEnumerator(n, d, std::move(a));
}

inline ShadowEnumerator direct_shadow(const PureState& psi, const OracleLimits& limits = {}) {
  detail::require_homogeneous(psi);
  const int n = psi.parties();
  return ShadowEnumerator(n, psi.profile()[0], shadow_from_purities(purity_set(psi, limits), n));
}

}  // namespace kuniform
