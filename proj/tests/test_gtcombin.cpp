#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "macb/gtcombin.hpp"
#include "macb/laurent.hpp"

using namespace macb;

TEST(Signature, ParseAndValidate) {
  EXPECT_EQ(Signature::parse("3,1,0").str(), "3,1,0");
  EXPECT_EQ(Signature::parse("2,-1").parts(), (std::vector<int>{2, -1}));
  EXPECT_THROW(Signature::parse("1,2"), ParseError);
  EXPECT_THROW(Signature::parse("1,,2"), ParseError);
  EXPECT_THROW(Signature({1, 2}), DomainError);
  EXPECT_EQ(Signature().length(), 0);
}

TEST(NuSpec, ParseRoundTrip) {
  NuSpec nu = NuSpec::parse("prefix=0,0,2;tail=const");
  EXPECT_EQ(nu.str(), "prefix=0,0,2;tail=const");
  EXPECT_EQ(NuSpec::parse(nu.str()), nu);
  EXPECT_EQ(nu.at(1), 0);
  EXPECT_EQ(nu.at(3), 2);
  EXPECT_EQ(nu.at(10), 2);
  EXPECT_EQ(NuSpec::parse("0,1"), NuSpec({0, 1}));
  EXPECT_THROW(NuSpec::parse("2,1"), ParseError);
  EXPECT_THROW(NuSpec::parse("prefix=0;tail=zero"), ParseError);
}

TEST(Interlacing, Examples) {
  EXPECT_EQ(interlacings_below({0, 0}), (std::vector<Signature>{{0}}));
  EXPECT_EQ(interlacings_below({1, 0}), (std::vector<Signature>{{0}, {1}}));
  EXPECT_EQ(interlacings_below({2, 0}).size(), 3u);
  EXPECT_TRUE(interlaces({1}, {2, 0}));
  EXPECT_FALSE(interlaces({3}, {2, 0}));
  EXPECT_FALSE(interlaces({1, 0}, {2, 0}));  // wrong length
}

TEST(Interlacing, CountIsProductOfGaps) {
  for (int N = 1; N <= 4; ++N)
    for (const Signature& lam : signatures_in_box(N, -2, 3)) {
      long expect = 1;
      for (int i = 0; i + 1 < N; ++i) expect *= lam[i] - lam[i + 1] + 1;
      auto below = interlacings_below(lam);
      EXPECT_EQ(static_cast<long>(below.size()), expect) << lam.str();
      EXPECT_TRUE(std::is_sorted(below.begin(), below.end()));
      for (const Signature& mu : below) EXPECT_TRUE(interlaces(mu, lam));
    }
}

TEST(Interlacing, ShiftInvariant) {
  for (const Signature& lam : signatures_in_box(3, -1, 2))
    for (const Signature& mu : signatures_in_box(2, -1, 2))
      for (int k : {-3, 2}) EXPECT_EQ(interlaces(mu, lam), interlaces(a_k_shift(mu, k), a_k_shift(lam, k)));
}

TEST(Dominance, Examples) {
  EXPECT_TRUE(dominance_leq({2, 1}, {2, 1}));
  EXPECT_TRUE(dominance_leq({1, 1}, {2, 0}));
  EXPECT_FALSE(dominance_leq({2, 0}, {1, 1}));
}

TEST(DiagramStats, Examples) {
  EXPECT_EQ(diagram_stats({5, 4, 4, 2}, 3, 3), (DiagramStats{1, 2, 0, 2}));
  EXPECT_EQ(diagram_stats({1}, 1, 1), (DiagramStats{0, 0, 0, 0}));
  EXPECT_EQ(diagram_stats({3, 1}, 1, 1), (DiagramStats{2, 0, 1, 0}));
  EXPECT_THROW(diagram_stats({1}, 2, 1), DomainError);
}

TEST(NOf, Examples) {
  EXPECT_EQ(n_of(Signature()), 0);
  EXPECT_EQ(n_of({3, 1}), 1);
  EXPECT_EQ(n_of({2, 2, 2}), 6);
}

TEST(Shift, Examples) {
  EXPECT_EQ(a_k_shift(Signature{1, 0}, 0), (Signature{1, 0}));
  EXPECT_EQ(a_k_shift(Signature{1, 0}, 1), (Signature{2, 1}));
  for (const Signature& s : signatures_in_box(3, -2, 2)) EXPECT_EQ(a_k_shift(a_k_shift(s, 4), -4), s);
  EXPECT_EQ(a_k_shift(NuSpec({0, 1}), 2), NuSpec({2, 3}));
}

TEST(Stabilizing, Examples) {
  EXPECT_EQ(stabilizing_signature(NuSpec({0}), 3), (Signature{0, 0, 0}));
  EXPECT_EQ(stabilizing_signature(NuSpec({0, 1, 2}), 2), (Signature{1, 0}));
  EXPECT_EQ(stabilizing_signature(NuSpec({-1, 3}), 4), (Signature{3, 3, 3, -1}));
}

TEST(Stabilizing, TailReadsPrefixBackwards) {
  NuSpec nu({-2, 0, 0, 3});
  for (int N = 1; N <= 8; ++N) {
    Signature s = stabilizing_signature(nu, N);
    for (int m = 1; m <= N; ++m)
      for (int i = 1; i <= m; ++i) EXPECT_EQ(s[N - i], nu.at(i));
  }
}

TEST(PhiSupport, Examples) {
  QParams q1(Rational(1) / 2, 1), q2(Rational(1) / 2, 2);
  auto as_set = [](std::vector<long> v) { return std::set<long>(v.begin(), v.end()); };
  EXPECT_EQ(as_set(phi_support_exponents(NuSpec({0}), q1, 3)), (std::set<long>{0, 1, 2}));
  EXPECT_EQ(as_set(phi_support_exponents(NuSpec({0}), q2, 2)), (std::set<long>{0, 1, 2, 3}));
  EXPECT_NE(as_set(phi_support_exponents(NuSpec({0, 1}), q2, 2)), as_set(phi_support_exponents(NuSpec({0, 2}), q2, 2)));
  for (int th = 1; th <= 3; ++th) {
    auto v = phi_support_exponents(NuSpec({-1, 0, 2}), QParams(Rational(1) / 3, th), 4);
    EXPECT_EQ(v.size(), static_cast<size_t>(4 * th));
    EXPECT_EQ(as_set(v).size(), v.size());
  }
}

TEST(Enumeration, BoxAndPartitionCounts) {
  EXPECT_EQ(signatures_in_box(3, -2, 3).size(), 56u);  // C(8,3)
  EXPECT_EQ(partitions_up_to(2, 3).size(), 6u);  // 0; 1; 2,11; 3,21
  for (const Signature& s : partitions_up_to(3, 5)) {
    EXPECT_TRUE(s.is_positive());
    EXPECT_LE(s.size(), 5);
  }
}

TEST(Laurent, ArithmeticAndEvaluation) {
  LaurentPoly x = LaurentPoly::variable(2, 0), y = LaurentPoly::variable(2, 1);
  LaurentPoly p = (x + y) * (x - y);
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.evaluate({Rational(3), Rational(2)}), 5);
  EXPECT_TRUE((x * y).is_symmetric());
  EXPECT_TRUE((x - y).is_antisymmetric());
  LaurentPoly inv = LaurentPoly::monomial({-1, 0});
  EXPECT_EQ((inv * x), LaurentPoly::constant(2, 1));
  EXPECT_EQ(p.scale_vars({Rational(2), Rational(2)}), p * Rational(4));
}

TEST(Laurent, DivideByDifference) {
  LaurentPoly x = LaurentPoly::variable(2, 0), y = LaurentPoly::variable(2, 1);
  LaurentPoly f = x * x * x - y * y * y;
  EXPECT_EQ(divide_by_difference(f, 0, 1), x * x + x * y + y * y);
  EXPECT_THROW(divide_by_difference(x, 0, 1), InternalError);
  LaurentPoly g = LaurentPoly::monomial({-1, 0}) - LaurentPoly::monomial({0, -1});  // 1/x - 1/y
  EXPECT_EQ(divide_by_difference(g, 0, 1), LaurentPoly::monomial({-1, -1}, Rational(-1)));
}
