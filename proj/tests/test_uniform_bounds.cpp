#include <gtest/gtest.h>

#include "support.hpp"

using namespace kuniform;

TEST(Alpha, Examples) {
  for (int n = 1; n <= 12; ++n)
    for (int d = 2; d <= 5; ++d) {
      EXPECT_EQ(alpha_closed_form(n, d, 0), 1);
      EXPECT_EQ(alpha_oracle(n, d, 0), 1);
      if (n >= 2) EXPECT_EQ(alpha_closed_form(n, d, 1), Rat(-n * (d - 1)));
    }
  EXPECT_EQ(alpha_oracle(2, 2, 1), -2);
  EXPECT_LT(alpha_closed_form(13, 3, 6), 0);
}

TEST(Alpha, IndexRangeIsEnforced) {
  EXPECT_THROW(alpha_closed_form(5, 3, 3), std::out_of_range);
  EXPECT_THROW(alpha_closed_form(5, 3, -1), std::out_of_range);
  EXPECT_THROW(alpha_oracle(6, 2, 4), std::out_of_range);
  EXPECT_THROW(alpha_closed_form(6, 1, 1), std::out_of_range);
}

TEST(Alpha, ClosedFormEqualsTriangularSolveOnSampledGrid) {
  // The full N <= 60 grid runs in the acceptance binary; this samples it.
  for (int trial = 0; trial < 200; ++trial) {
    const int n = kt::uniform_int(1, 40), d = kt::uniform_int(2, 5);
    const int i = kt::uniform_int(0, n / 2);
    ASSERT_EQ(alpha_closed_form(n, d, i), alpha_oracle(n, d, i)) << n << " " << d << " " << i;
  }
}

TEST(KUpperBound, Examples) {
  EXPECT_EQ(k_upper_bound(8, 3).k_max, 3);
  EXPECT_EQ(k_upper_bound(10, 2).k_max, 3);
  const auto v14 = k_upper_bound(14, 3);
  EXPECT_EQ(v14.k_max, 6);
  EXPECT_EQ(v14.provenance, Provenance::ame_table);
  EXPECT_FALSE(v14.witness.has_value());
  EXPECT_EQ(k_upper_bound(161, 4).k_max, 75);
  EXPECT_EQ(k_upper_bound(276, 5).k_max, 135);
}

TEST(KUpperBound, SignWitnessIsReported) {
  const auto v = k_upper_bound(8, 3);
  EXPECT_EQ(v.provenance, Provenance::alpha_sign);
  ASSERT_TRUE(v.alpha_index && v.witness);
  EXPECT_EQ(*v.alpha_index, 4);
  EXPECT_EQ(*v.witness, alpha_closed_form(8, 3, 4));
  EXPECT_LT(*v.witness, 0);
}

TEST(KUpperBound, SmallSystemsAreTrivial) {
  for (int d = 2; d <= 6; ++d)
    for (int n = 2; n <= 3; ++n) {
      const auto v = k_upper_bound(n, d);
      EXPECT_EQ(v.k_max, 1);
      EXPECT_EQ(v.provenance, Provenance::trivial);
    }
  EXPECT_THROW(k_upper_bound(1, 2), std::out_of_range);
  EXPECT_THROW(k_upper_bound(5, 1), std::out_of_range);
}

TEST(KUpperBound, VanishingAlphaCapsQubitBound) {
  // N = 11: alpha_4 = 0 exactly, so k <= 4 even though no sign fails first.
  const auto v = k_upper_bound(11, 2);
  EXPECT_EQ(v.k_max, 4);
  EXPECT_EQ(v.provenance, Provenance::alpha_vanishing);
  ASSERT_TRUE(v.vanishing_index.has_value());
  EXPECT_EQ(alpha_closed_form(11, 2, *v.vanishing_index), 0);
  EXPECT_NE(*v.witness, 0);
}

TEST(KUpperBound, NeverExceedsTrivialAndTrivialOnlyWhenNothingFires) {
  for (int d = 2; d <= 6; ++d)
    for (int n = 2; n <= 70; ++n) {
      const auto v = k_upper_bound(n, d);
      ASSERT_GE(v.k_max, 0);
      ASSERT_LE(v.k_max, n / 2);
      if (v.provenance == Provenance::trivial) ASSERT_EQ(v.k_max, n / 2);
      else ASSERT_LT(v.k_max, n / 2);
      ASSERT_EQ(v.witness.has_value(),
                v.provenance == Provenance::alpha_sign || v.provenance == Provenance::alpha_vanishing);
    }
}

TEST(KUpperBound, DisablingSourcesOnlyLoosensBound) {
  for (int d = 2; d <= 5; ++d)
    for (int n = 2; n <= 60; ++n) {
      const int full = k_upper_bound(n, d).k_max;
      const int bare = k_upper_bound(n, d, {false, false}).k_max;
      ASSERT_LE(full, bare);
    }
}

TEST(KUpperBound, QubitsFollowPiecewiseFormula) {
  for (int n = 4; n <= 60; ++n) ASSERT_EQ(k_upper_bound(n, 2).k_max, rains_bound(n)) << "N=" << n;
}

TEST(AmeTable, KnownEntries) {
  const auto& t = AmeNonexistenceTable::known();
  EXPECT_TRUE(t.contains(3, 8));
  EXPECT_TRUE(t.contains(3, 23));
  EXPECT_FALSE(t.contains(3, 9));
  EXPECT_TRUE(t.contains(4, 39));
  EXPECT_FALSE(t.contains(4, 40));
  EXPECT_TRUE(t.contains(5, 48));
  EXPECT_TRUE(t.contains(2, 4));
  EXPECT_FALSE(t.contains(2, 5));
  EXPECT_FALSE(t.contains(2, 7));
  EXPECT_TRUE(t.contains(2, 8));
  EXPECT_TRUE(t.contains(2, 31));
  EXPECT_FALSE(t.contains(6, 10));
}

TEST(AmeTable, QubitRuleMatchesRainsBelowTrivial) {
  for (int n = 4; n <= 60; ++n) EXPECT_EQ(AmeNonexistenceTable::known().contains(2, n), rains_bound(n) < n / 2) << n;
}

TEST(Scott, Condition) {
  EXPECT_TRUE(scott_condition(8, 2));
  EXPECT_FALSE(scott_condition(6, 2));
  EXPECT_TRUE(scott_condition(25, 3));
  EXPECT_FALSE(scott_condition(23, 3));
}

TEST(RangeFormula, Examples) {
  EXPECT_EQ(theorem4_formula(28), 13);
  EXPECT_EQ(theorem4_formula(88), 37);
  EXPECT_THROW(theorem4_formula(23), not_applicable_error);
  EXPECT_THROW(theorem4_formula(37), not_applicable_error);
  EXPECT_THROW(theorem4_formula(51), not_applicable_error);
  EXPECT_THROW(theorem4_formula(9), not_applicable_error);
}

TEST(RangeFormula, MatchesSignTestThroughNinetyAndBoundsItBeyond) {
  for (int n = 10; n <= 200; ++n) {
    if (n == 23 || n == 37 || n == 51) continue;
    const int sign_only = k_upper_bound(n, 3, {false, false}).k_max;
    if (n <= 100) ASSERT_EQ(sign_only, theorem4_formula(n)) << n;
    else ASSERT_LE(sign_only, theorem4_formula(n)) << n;
  }
}

TEST(RangeFormula, DecisiveIndex) {
  EXPECT_EQ(d3_range_alpha_index(2, -1), 12);
  EXPECT_EQ(d3_range_alpha_index(2, 0), 14);
  EXPECT_EQ(d3_range_alpha_index(2, 9), 16);
  EXPECT_THROW(d3_range_alpha_index(2, 10), std::out_of_range);
}

TEST(Conjecture, Examples) {
  const auto r77 = conjecture_scan(4, 77, 77).front();
  EXPECT_EQ(r77.formula, 37);
  EXPECT_EQ(r77.computed, 37);
  EXPECT_TRUE(r77.agree);
  const auto r183 = conjecture_scan(5, 183, 183).front();
  EXPECT_EQ(r183.formula, 89);
  EXPECT_TRUE(r183.agree);
  const auto r38 = conjecture_scan(4, 38, 38).front();
  EXPECT_TRUE(r38.exception);
  EXPECT_FALSE(r38.consistent);
  EXPECT_THROW(conjecture_scan(3, 10, 20), std::out_of_range);
}

TEST(Conjecture, OutsideDomainHasNoFormula) {
  const auto rows = conjecture_scan(4, 10, 21);
  for (const auto& r : rows) {
    EXPECT_FALSE(r.formula.has_value());
    EXPECT_FALSE(r.agree);
  }
  EXPECT_FALSE(conjecture_formula(5, 179).has_value());
}

TEST(Conjecture, OnlyTheNamedExceptionContradictsTheFormula) {
  for (const auto& r : conjecture_scan(4, 22, 161))
    if (!r.consistent) EXPECT_EQ(r.n, 38);
  for (const auto& r : conjecture_scan(5, 180, 276)) EXPECT_TRUE(r.consistent) << r.n;
}
