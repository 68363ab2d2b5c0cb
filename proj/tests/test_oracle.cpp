#include <gtest/gtest.h>

#include "support.hpp"

using namespace kuniform;

namespace {

std::vector<Rat> ints(std::initializer_list<long> v) {
  std::vector<Rat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

/// Swap-trick purity over the dense amplitude vector:
/// Tr(rho_S^2) = sum psi(x,c) psi*(x,c') psi(x',c') psi*(x',c) / |psi|^4.
Rat swap_trick_purity(const PureState& psi, std::uint32_t mask) {
  const auto& dims = psi.profile().dims();
  const int n = psi.parties();
  std::size_t total = 1;
  for (int d : dims) total *= static_cast<std::size_t>(d);
  std::vector<GaussRat> dense(total);
  std::vector<Ket> kets(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    Ket k(static_cast<std::size_t>(n));
    std::size_t r = idx;
    for (int i = n - 1; i >= 0; --i) {
      k[i] = static_cast<int>(r % dims[i]);
      r /= dims[i];
    }
    kets[idx] = k;
    if (auto it = psi.amplitudes().find(k); it != psi.amplitudes().end()) dense[idx] = it->second;
  }
  auto index_of = [&](const Ket& k) {
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) idx = idx * dims[i] + k[i];
    return idx;
  };
  // Mix the S part of one ket with the complement part of another.
  auto mix = [&](const Ket& s_from, const Ket& c_from) {
    Ket k(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) k[i] = (mask >> i & 1u) ? s_from[i] : c_from[i];
    return index_of(k);
  };
  GaussRat sum;
  for (std::size_t a = 0; a < total; ++a) {
    if (dense[a].is_zero()) continue;
    for (std::size_t b = 0; b < total; ++b) {
      if (dense[b].is_zero()) continue;
      // a = (x, c), b = (x', c')
      sum += dense[a] * dense[mix(kets[a], kets[b])].conj() * dense[b] * dense[mix(kets[b], kets[a])].conj();
    }
  }
  EXPECT_EQ(sum.im, 0);
  return sum.re / (psi.norm2() * psi.norm2());
}

PureState random_state(int n, int d) {
  std::map<Ket, GaussRat> amps;
  const int terms = kt::uniform_int(1, 6);
  for (int t = 0; t < terms; ++t) {
    Ket k;
    for (int i = 0; i < n; ++i) k.push_back(kt::uniform_int(0, d - 1));
    amps[k] = GaussRat(Rat(kt::uniform_int(-3, 3)), Rat(kt::uniform_int(-3, 3)));
  }
  amps[Ket(static_cast<std::size_t>(n), 0)] = GaussRat(Rat(1));
  return PureState(DimensionProfile::homogeneous(d, n), std::move(amps));
}

std::uint32_t full_mask(int n) { return (1u << n) - 1; }

}  // namespace

TEST(State, ValidatesInput) {
  const auto p = DimensionProfile::homogeneous(2, 2);
  EXPECT_THROW(PureState(p, {{{0, 0, 0}, GaussRat(1)}}), std::invalid_argument);
  EXPECT_THROW(PureState(p, {{{0, 2}, GaussRat(1)}}), std::out_of_range);
  EXPECT_THROW(PureState(p, {}), std::invalid_argument);
  EXPECT_THROW(PureState(p, {{{0, 1}, GaussRat(0)}}), std::invalid_argument);
  const PureState s(p, {{{0, 0}, GaussRat(1)}, {{1, 1}, GaussRat(0)}});
  EXPECT_EQ(s.amplitudes().size(), 1u);
  EXPECT_EQ(s.norm2(), 1);
}

TEST(Purity, Examples) {
  const std::vector<int> first{0};
  EXPECT_EQ(purity(corpus::bell(), first), make_rat(1, 2));
  EXPECT_EQ(purity(corpus::complex_bell(), first), make_rat(1, 2));
  EXPECT_EQ(purity(corpus::product({2, 2}, {0, 0}), first), 1);
  EXPECT_EQ(purity(corpus::ghz(3, 3), first), make_rat(1, 3));
  const std::vector<int> pair{0, 1};
  EXPECT_EQ(purity(corpus::ghz(3, 2), pair), make_rat(1, 2));
  EXPECT_EQ(purity(corpus::ame_4_3(), pair), make_rat(1, 9));
  EXPECT_EQ(purity(corpus::w3(), first), make_rat(5, 9));
  EXPECT_EQ(purity(corpus::tilted_product(), first), 1);
  const std::vector<int> none;
  EXPECT_EQ(purity(corpus::w3(), none), 1);
  const std::vector<int> bad{3};
  EXPECT_THROW(purity(corpus::w3(), bad), std::out_of_range);
}

TEST(Purity, MatchesSwapTrickOnRandomStates) {
  for (int trial = 0; trial < 150; ++trial) {
    const int d = kt::uniform_int(2, 3);
    const int n = kt::uniform_int(2, d == 2 ? 5 : 4);
    const auto psi = random_state(n, d);
    const auto mask = static_cast<std::uint32_t>(kt::uniform_int(0, static_cast<int>(full_mask(n))));
    ASSERT_EQ(purity_set(psi)[mask], swap_trick_purity(psi, mask));
  }
}

TEST(Purity, ComplementsAgreeForPureStates) {
  for (int trial = 0; trial < 150; ++trial) {
    const int n = kt::uniform_int(2, 5);
    const auto psi = random_state(n, kt::uniform_int(2, 3));
    const auto p = purity_set(psi);
    for (std::uint32_t m = 0; m <= full_mask(n); ++m) {
      ASSERT_EQ(p[m], p[full_mask(n) & ~m]);
      ASSERT_LE(p[m], 1);
      ASSERT_GT(p[m], 0);
    }
    ASSERT_EQ(p[0], 1);
  }
}

TEST(Uniformity, Examples) {
  EXPECT_TRUE(is_k_uniform(corpus::bell(), 1));
  EXPECT_FALSE(is_k_uniform(corpus::product({2, 2}, {0, 0}), 1));
  EXPECT_TRUE(is_k_uniform(corpus::ame_4_3(), 2));
  EXPECT_TRUE(is_k_uniform(corpus::ghz(5, 2), 1));
  EXPECT_FALSE(is_k_uniform(corpus::ghz(5, 2), 2));
  EXPECT_FALSE(is_k_uniform(corpus::w3(), 1));
  EXPECT_TRUE(is_k_uniform(corpus::w3(), 0));
  EXPECT_THROW(is_k_uniform(corpus::w3(), 2), std::out_of_range);
}

TEST(Enumerator, Examples) {
  EXPECT_EQ(direct_enumerator(corpus::bell()).coeffs(), ints({1, 0, 3}));
  EXPECT_EQ(direct_enumerator(corpus::product({2, 2}, {0, 0})).coeffs(), ints({1, 2, 1}));
  EXPECT_EQ(direct_enumerator(corpus::ghz(3, 2)).coeffs(), ints({1, 0, 3, 4}));
  EXPECT_EQ(direct_shadow(corpus::ghz(3, 2)).coeffs(), ints({0, 3, 0, 5}));
  EXPECT_EQ(direct_enumerator(corpus::ame_4_3()).coeffs(), ints({1, 0, 0, 32, 48}));
}

TEST(Enumerator, ProductStatesExpandBinomially) {
  for (int n = 2; n <= 5; ++n)
    for (int d = 2; d <= 3; ++d) {
      const auto a = direct_enumerator(corpus::product(std::vector<int>(n, d), Ket(n, d - 1)));
      for (int j = 0; j <= n; ++j) ASSERT_EQ(a[j], Rat(binom(n, j) * pow_int(BigInt(d - 1), static_cast<unsigned long>(j))));
    }
}

TEST(Enumerator, CorpusSatisfiesEveryIdentity) {
  const auto states = corpus::bundled();
  ASSERT_GE(states.size(), 12u);
  for (const auto& [name, psi] : states) {
    const auto a = direct_enumerator(psi);
    const int n = psi.parties(), d = psi.profile()[0];
    EXPECT_EQ(shadow_transform(a), direct_shadow(psi)) << name;
    EXPECT_TRUE(validate_state_constraints(a).all_passed()) << name;
    Rat total(0);
    for (const auto& v : a.coeffs()) total += v;
    EXPECT_EQ(total, pow_int(Rat(d), n)) << name;
    for (int k = 0; k <= n / 2; ++k) {
      bool zeros = true;
      for (int j = 1; j <= k; ++j) zeros = zeros && a[j] == 0;
      EXPECT_EQ(is_k_uniform(psi, k), zeros) << name << " k=" << k;
    }
  }
}

TEST(Enumerator, RandomStatesSatisfyEveryIdentity) {
  for (int trial = 0; trial < 100; ++trial) {
    const int d = kt::uniform_int(2, 3);
    const auto psi = random_state(kt::uniform_int(2, d == 2 ? 6 : 4), d);
    const auto a = direct_enumerator(psi);
    ASSERT_EQ(macwilliams_transform(a), a);
    ASSERT_EQ(shadow_transform(a), direct_shadow(psi));
    ASSERT_TRUE(validate_state_constraints(a).all_passed());
  }
}

TEST(ShadowSums, FactorizedMatchesLiteralDoubleSum) {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = kt::uniform_int(0, 7);
    const auto p = kt::random_rats(std::size_t{1} << n);
    ASSERT_EQ(shadow_from_purities(p, n), shadow_from_purities_direct(p, n));
  }
  EXPECT_THROW(shadow_from_purities(ints({1, 2, 3}), 1), std::invalid_argument);
}

TEST(AmePurities, SmallerSideIsMaximallyMixed) {
  const auto p = ame_purity_profile(parse_profile("3x1,2x2"));
  EXPECT_EQ(p[0], 1);
  EXPECT_EQ(p[1], make_rat(1, 3));
  EXPECT_EQ(p[2], make_rat(1, 2));
  EXPECT_EQ(p[6], make_rat(1, 3));  // complement of party 0
  EXPECT_EQ(p[7], 1);
}

TEST(Limits, CapsAreEnforced) {
  const std::vector<int> first{0};
  EXPECT_THROW(purity(corpus::ghz(13, 2), first), capacity_error);
  EXPECT_NO_THROW(purity(corpus::ghz(13, 2), first, {1u << 13, 12}));
  EXPECT_THROW(purity_set(corpus::ghz(5, 2), {4096, 4}), capacity_error);
  EXPECT_THROW(direct_enumerator(corpus::ghz(13, 2), {1u << 13, 12}), capacity_error);
  EXPECT_THROW(is_k_uniform(corpus::ghz(4, 3), 1, {80, 12}), capacity_error);
}

TEST(Limits, HeterogeneousStatesHaveNoEnumerator) {
  const auto psi = corpus::product({2, 3}, {0, 2});
  EXPECT_THROW(direct_enumerator(psi), not_applicable_error);
  EXPECT_THROW(direct_shadow(psi), not_applicable_error);
  EXPECT_FALSE(is_k_uniform(psi, 1));
  EXPECT_EQ(purity_set(psi)[1], 1);
}
