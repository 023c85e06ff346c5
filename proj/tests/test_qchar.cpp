#include <gtest/gtest.h>

#include <algorithm>

#include "macb/macpoly.hpp"
#include "macb/qchar.hpp"
#include "macb/sampling.hpp"

using namespace macb;

namespace {

Rational R(long a, long b = 1) { return Rational(a) / Rational(b); }

std::vector<Rational> generic(RationalSampler& rs, int k, const QParams& qp) {
  return rs.points(k, [&](const std::vector<Rational>& v) { return q_generic(v, qp); });
}

}  // namespace

TEST(Character, PrincipalPointAndZeroSignature) {
  QParams qp(R(1, 2), 2);
  RationalSampler rs(1);
  for (int N = 1; N <= 4; ++N) {
    for (const Signature& lam : signatures_in_box(N, -1, 2)) {
      // the free variables complete (1, t, ..., t^{N-1})
      EXPECT_EQ(character(lam, N, {rpow(qp.t(), N - 1)}, qp), 1);
      if (N >= 2) {
        EXPECT_EQ(character(lam, N, {rpow(qp.t(), N - 2), rpow(qp.t(), N - 1)}, qp), 1);
      }
    }
    auto xs = generic(rs, std::min(N, 3), qp);
    EXPECT_EQ(character(Signature(std::vector<int>(static_cast<size_t>(N), 0)), N, xs, qp), 1);
  }
  EXPECT_THROW(character({1, 0}, 3, {R(2)}, qp), DomainError);
  EXPECT_THROW(character({1, 0}, 2, {R(2), R(3), R(5)}, qp), DomainError);
}

TEST(Character, MatchesPolynomialRatio) {
  QParams qp(R(1, 3), 2);
  RationalSampler rs(2);
  for (const Signature& lam : signatures_in_box(3, -1, 2)) {
    auto xs = generic(rs, 2, qp);
    LaurentPoly p = macdonald_poly(lam, 3, qp);
    Rational expect = p.evaluate({xs[0], xs[1], R(1)}) / p.evaluate(principal_point(3, qp));
    EXPECT_EQ(character(lam, 3, xs, qp), expect);
  }
}

TEST(Conventions, AdaptersAgreeWithDirectPolynomial) {
  QParams qp(R(1, 2), 2);
  const Rational& t = qp.t();
  Signature lam{3, 1, -1};
  LaurentPoly p = macdonald_poly(lam, 3, qp);
  Rational ep = p.evaluate(principal_point(3, qp));
  Rational x(5, 3), y(-2, 7);
  EXPECT_EQ(character_in(CharConvention::Contour, lam, 3, {x}, qp), p.evaluate({x, t, t * t}) / ep);
  EXPECT_EQ(character_in(CharConvention::Prelimit, lam, 3, {x, y}, qp),
            p.evaluate({x, y, 1 / (t * t)}) / p.evaluate({R(1), 1 / t, 1 / (t * t)}));
  EXPECT_EQ(character_in(CharConvention::Generating, lam, 3, {x, y}, qp), p.evaluate({R(1), x * t, y * t * t}) / ep);
  EXPECT_EQ(character_in(CharConvention::Unitary, lam, 3, {x}, qp), character(lam, 3, {x}, qp));
  EXPECT_THROW(character_in(CharConvention::Contour, lam, 3, {x, y}, qp), DomainError);
}

TEST(Residue, Examples) {
  QParams qp(R(1, 2), 2);
  EXPECT_EQ(character_in(CharConvention::Contour, {2, 1, 0}, 3, {R(2)}, qp), residue_character({2, 1, 0}, 3, R(2), qp));
  for (int N = 1; N <= 5; ++N) {
    Signature zero(std::vector<int>(static_cast<size_t>(N), 0));
    for (Rational x : std::vector<Rational>{R(2), R(-1, 3), R(7, 5)}) EXPECT_EQ(residue_character(zero, N, x, qp), 1);
  }
  for (const Signature& lam : signatures_in_box(3, -2, 2)) EXPECT_EQ(residue_character(lam, 3, R(1), qp), 1);
  QParams q1(R(1, 2), 1);
  Rational t = q1.t();
  LaurentPoly p = macdonald_poly({3, 1}, 2, q1);
  EXPECT_EQ(residue_character({3, 1}, 2, R(4), q1), p.evaluate({R(4), t}) / p.evaluate({R(1), t}));
}

TEST(Residue, PolesAreReported) {
  QParams qp(R(1, 2), 2);
  EXPECT_THROW(residue_character({1, 0}, 2, R(0), qp), PoleError);
  EXPECT_THROW(residue_character({1, 0}, 2, qp.qpow(3), qp), PoleError);
  try {
    residue_character({1, 0}, 2, qp.qpow(2), qp);
    FAIL();
  } catch (const PoleError& e) {
    EXPECT_NE(std::string(e.what()).find("q^2"), std::string::npos);
  }
  auto poles = residue_poles({2, 0, -1}, 3, qp);
  EXPECT_EQ(poles.size(), 6u);
  EXPECT_EQ(std::adjacent_find(poles.begin(), poles.end()), poles.end());
}

TEST(Residue, ShiftCovariance) {
  for (int th = 1; th <= 3; ++th) {
    QParams qp(R(2, 3), th);
    for (const Signature& lam : signatures_in_box(3, -1, 2))
      for (Rational x : std::vector<Rational>{R(2), R(5, 7)})
        EXPECT_EQ(residue_character(a_k_shift(lam, 1), 3, x, qp), x * residue_character(lam, 3, x, qp));
  }
}

TEST(ShiftOperators, Basics) {
  QParams qp(R(1, 3), 1);
  LaurentPoly c = LaurentPoly::constant(2, 7);
  EXPECT_EQ(qshift_var(0, c, qp), c);
  EXPECT_TRUE(qdeg_apply(1, c, qp).is_zero());
  for (int m = -2; m <= 4; ++m) {
    LaurentPoly xm = LaurentPoly::monomial({m, 0});
    Rational qm = (1 - qp.qpow(m)) / (1 - qp.q());
    EXPECT_EQ(qdeg_apply(0, xm, qp), xm * qm);
  }
  QShiftExpr e(2);
  e.add(R(2), {1, 0});
  e.add(R(-1), {0, 2});
  LaurentPoly f = LaurentPoly::monomial({1, 1});
  EXPECT_EQ(qshift_apply(e, f, qp), f * (2 * qp.q() - qp.q() * qp.q()));
  // T = 1 + (q-1) D reproduces the same action in the D basis
  LaurentPoly viaD(2);
  for (const auto& [d, coef] : e.to_degree_basis(qp)) viaD += qdeg_power_apply(d, f, qp) * coef;
  EXPECT_EQ(viaD, qshift_apply(e, f, qp));
}

TEST(Multiplicative, Examples) {
  QParams qp(R(1, 2), 2);
  RationalSampler rs(3);
  EXPECT_EQ(multiplicative_character({2, 1, 0}, 3, 2, {R(3), R(7)}, qp), character({2, 1, 0}, 3, {R(3), R(7)}, qp));
  for (int i = 0; i < 5; ++i) {
    auto xs = generic(rs, 3, qp);
    EXPECT_EQ(multiplicative_character({1, 0, 0}, 3, 3, xs, qp), character({1, 0, 0}, 3, xs, qp));
    auto x1 = generic(rs, 1, qp);
    EXPECT_EQ(multiplicative_character({2, -1, -1}, 3, 1, x1, qp), character({2, -1, -1}, 3, x1, qp));
  }
}

TEST(Multiplicative, SymmetricInArguments) {
  QParams qp(R(1, 3), 2);
  RationalSampler rs(4);
  for (const Signature& lam : signatures_in_box(3, -1, 1)) {
    auto xs = generic(rs, 3, qp);
    Rational base = multiplicative_character(lam, 3, 3, xs, qp);
    std::vector<Rational> p = xs;
    std::sort(p.begin(), p.end());
    do {
      EXPECT_EQ(multiplicative_character(lam, 3, 3, p, qp), base);
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST(Iterated, StepsAndAgreement) {
  RationalSampler rs(5);
  for (int th = 1; th <= 3; ++th) {
    QParams qp(R(1, 2), th);
    for (const Signature& lam : signatures_in_box(3, -1, 2)) {
      auto xs = generic(rs, 2, qp);
      IteratedResult r = two_var_iterated(lam, 3, xs, qp);
      EXPECT_EQ(r.steps, th);
      EXPECT_EQ(r.value, character(lam, 3, xs, qp));
    }
    EXPECT_EQ(two_var_iterated({0, 0, 0}, 3, {R(3), R(-2)}, qp).value, 1);
  }
}

TEST(Schur, Basics) {
  EXPECT_EQ(schur_poly(Signature(), 0), LaurentPoly::constant(0, 1));
  EXPECT_EQ(schur_poly({1, 0}, 2), LaurentPoly::variable(2, 0) + LaurentPoly::variable(2, 1));
  EXPECT_EQ(schur_bialternant({2, 1}, {R(2), R(3)}), R(2 * 2 * 3 + 2 * 3 * 3));
  QParams qp(R(1, 2), 1);
  for (int N = 1; N <= 4; ++N)
    for (const Signature& lam : partitions_up_to(N, 5)) EXPECT_EQ(macdonald_poly(lam, N, qp), schur_poly(lam, N));
}

TEST(Schur, ShiftExpansions) {
  for (int m = 1; m <= 4; ++m) EXPECT_EQ(vandermonde_shift_expansion(m), signed_matrix_shift_expansion(m));
  EXPECT_EQ(vandermonde_shift_expansion(2), (std::map<Exponent, long>{{{0, 1}, 1}, {{1, 0}, -1}}));
}

TEST(Schur, OperatorFormula) {
  QParams qp(R(2, 3), 1);
  RationalSampler rs(6);
  for (int m = 1; m <= 3; ++m)
    for (const Signature& lam : partitions_up_to(3, 3)) {
      auto xs = generic(rs, m, qp);
      EXPECT_EQ(schur_character(lam, 3, m, xs, qp), character(lam, 3, xs, qp));
    }
  EXPECT_THROW(schur_character({1, 0}, 2, 1, {R(2)}, QParams(R(1, 2), 2)), DomainError);
}

TEST(DBasis, LowDegreesVanishAndClosedForms) {
  RationalSampler rs(7);
  for (Rational q : std::vector<Rational>{R(1, 2), R(2, 3)}) {
    QParams qp(q, 2);
    for (int p = 0; p < 5; ++p) {
      auto xs = generic(rs, 3, qp);
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b)
          for (int c = 0; a + b + c <= 2; ++c) EXPECT_EQ(d_basis_coefficient({a, b, c}, xs, qp), 0);
      EXPECT_EQ(d_basis_coefficient({4, 1, 0}, xs, qp), d_basis_closed_410(xs, qp));
      EXPECT_EQ(d_basis_coefficient({2, 1, 1}, xs, qp), d_basis_closed_211(xs, qp));
    }
  }
  EXPECT_THROW(d_basis_coefficient({3, 2, 1}, {R(2), R(3), R(5)}, QParams(R(1, 2), 2)), DomainError);
}

TEST(DBasis, TopPartPlusRemainderIsFaithful) {
  QParams qp(R(1, 2), 2);
  RationalSampler rs(8);
  LaurentPoly f = LaurentPoly::monomial({2, 1, 0}) + LaurentPoly::monomial({0, 0, 3}, R(-3, 2)) + LaurentPoly::monomial({1, 1, 1});
  for (int p = 0; p < 3; ++p) {
    auto [direct, split] = d_basis_top_consistency(f, generic(rs, 3, qp), qp);
    EXPECT_EQ(direct, split);
  }
}
