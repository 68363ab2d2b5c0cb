#include <gtest/gtest.h>

#include "support.hpp"

using namespace kuniform;

TEST(Binom, BoundaryValues) {
  EXPECT_EQ(binom(0, 0), 1);
  EXPECT_EQ(binom(5, 7), 0);
  EXPECT_EQ(binom(5, -1), 0);
  EXPECT_EQ(binom(52, 26), BigInt("495918532948104"));
  EXPECT_THROW(binom(-1, 0), std::domain_error);
}

TEST(Binom, MatchesPascalTriangleUpTo40) {
  const auto rows = kt::pascal(40);
  for (int n = 0; n <= 40; ++n)
    for (int k = -1; k <= n + 1; ++k) {
      const BigInt expect = (k < 0 || k > n) ? BigInt(0) : rows[n][k];
      ASSERT_EQ(binom(n, k), expect) << "n=" << n << " k=" << k;
    }
}

TEST(Binom, WideArgumentsStayExact) {
  // Row 300 reaches well past 64 bits; symmetry and the row sum pin it down.
  BigInt total(0);
  for (int k = 0; k <= 300; ++k) {
    total += binom(300, k);
    ASSERT_EQ(binom(300, k), binom(300, 300 - k));
  }
  EXPECT_EQ(total, pow_int(BigInt(2), 300ul));
}

TEST(BinomExt, NegativeArguments) {
  EXPECT_EQ(binom_ext(-1, -1), 1);
  EXPECT_EQ(binom_ext(-1, 0), 1);
  EXPECT_EQ(binom_ext(-1, 3), -1);
  EXPECT_EQ(binom_ext(-2, 2), 3);
  EXPECT_EQ(binom_ext(-3, -5), 6);
  EXPECT_EQ(binom_ext(-3, -2), 0);
  EXPECT_EQ(binom_ext(4, 2), 6);
}

TEST(BinomExt, SatisfiesPascalRuleEverywhere) {
  for (long n = -8; n <= 8; ++n)
    for (long k = -8; k <= 8; ++k) {
      if (n == 0 && k == 0) continue;  // the one point where the extended rule breaks
      ASSERT_EQ(binom_ext(n, k), binom_ext(n - 1, k - 1) + binom_ext(n - 1, k)) << n << "," << k;
    }
}

TEST(ElemSym, Examples) {
  const std::vector<Rat> v{make_rat(1, 3), make_rat(1, 2), make_rat(1, 2)};
  EXPECT_EQ(elem_sym(v, 1), make_rat(4, 3));
  EXPECT_EQ(elem_sym(v, 0), 1);
  const std::vector<Rat> halves{make_rat(1, 2), make_rat(1, 2)};
  EXPECT_EQ(elem_sym(halves, 2), make_rat(1, 4));
  EXPECT_EQ(elem_sym(std::vector<Rat>{}, 0), 1);
  EXPECT_THROW(elem_sym(halves, 3), std::out_of_range);
}

TEST(ElemSym, MatchesSubsetEnumerationOnRandomInputs) {
  for (int trial = 0; trial < 300; ++trial) {
    const auto v = kt::random_rats(static_cast<std::size_t>(kt::uniform_int(0, 10)));
    const auto all = elem_sym_all(v);
    for (int k = 0; k <= static_cast<int>(v.size()); ++k) {
      const Rat expect = kt::elem_sym_subsets(v, k);
      ASSERT_EQ(elem_sym(v, k), expect);
      ASSERT_EQ(all[k], expect);
    }
  }
}

TEST(ElemSym, ProductExpansionCoefficients) {
  // prod (1 + v_i x) multiplied out one factor at a time.
  for (int trial = 0; trial < 200; ++trial) {
    const auto v = kt::random_rats(static_cast<std::size_t>(kt::uniform_int(1, 10)));
    std::vector<Rat> poly{Rat(1)};
    for (const auto& x : v) poly = convolve(poly, std::vector<Rat>{Rat(1), x});
    for (std::size_t k = 0; k < poly.size(); ++k) ASSERT_EQ(elem_sym(v, k), poly[k]);
  }
}

TEST(Rat, FieldAxiomsOnRandomTriples) {
  for (int trial = 0; trial < 1000; ++trial) {
    const Rat a = kt::random_rat(), b = kt::random_rat(), c = kt::random_rat();
    ASSERT_EQ(Rat((a + b) + c), Rat(a + (b + c)));
    ASSERT_EQ(Rat(a * b), Rat(b * a));
    ASSERT_EQ(Rat((a * b) * c), Rat(a * (b * c)));
    ASSERT_EQ(Rat(a * (b + c)), Rat(a * b + a * c));
    ASSERT_EQ(sign(Rat(a * b)), sign(a) * sign(b));
    const Rat s = a + b;
    ASSERT_EQ(gcd(s.get_num(), s.get_den()), 1);
    ASSERT_GT(s.get_den(), 0);
  }
}

TEST(Rat, MakeRatCanonicalizes) {
  const Rat r = make_rat(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_THROW(make_rat(1, 0), std::domain_error);
}

TEST(Rat, TextRoundTrip) {
  EXPECT_EQ(to_string(Rat(3)), "3/1");
  EXPECT_EQ(to_string(make_rat(-23, 12)), "-23/12");
  EXPECT_EQ(to_string(Rat(0)), "0/1");
  EXPECT_EQ(parse_rat("-23/12"), make_rat(-23, 12));
  EXPECT_EQ(parse_rat("+4/6"), make_rat(2, 3));
  EXPECT_EQ(parse_rat("7"), 7);
  for (const char* bad : {"", "1/", "/2", "1.5", "1/-2", "a/b", "1 /2", "1/0"})
    EXPECT_ANY_THROW(parse_rat(bad)) << bad;
  for (int trial = 0; trial < 200; ++trial) {
    const Rat r = kt::random_rat(1000, 1000);
    ASSERT_EQ(parse_rat(to_string(r)), r);
  }
}

TEST(Rat, PowIntHandlesNegativeExponents) {
  EXPECT_EQ(pow_int(make_rat(2, 3), 3), make_rat(8, 27));
  EXPECT_EQ(pow_int(make_rat(-2, 3), -3), make_rat(-27, 8));
  EXPECT_EQ(pow_int(Rat(5), 0), 1);
  EXPECT_THROW(pow_int(Rat(0), -1), std::domain_error);
}

TEST(GaussRat, ConjugateAndModulus) {
  const GaussRat z(make_rat(1, 2), make_rat(-1, 3));
  EXPECT_EQ(z.norm2(), make_rat(13, 36));
  EXPECT_EQ((z * z.conj()).re, z.norm2());
  EXPECT_EQ((z * z.conj()).im, 0);
  const GaussRat i(Rat(0), Rat(1));
  EXPECT_EQ(i * i, GaussRat(Rat(-1)));
  for (int trial = 0; trial < 300; ++trial) {
    const GaussRat a(kt::random_rat(), kt::random_rat()), b(kt::random_rat(), kt::random_rat());
    ASSERT_EQ((a * b).norm2(), a.norm2() * b.norm2());
    ASSERT_EQ((a * b).conj(), a.conj() * b.conj());
  }
}
