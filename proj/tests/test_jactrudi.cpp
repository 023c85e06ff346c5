#include <gtest/gtest.h>

#include "macb/gtcombin.hpp"
#include "macb/jactrudi.hpp"
#include "macb/macpoly.hpp"
#include "macb/sampling.hpp"

using namespace macb;

namespace {

Rational R(long a, long b = 1) { return Rational(a) / Rational(b); }

std::vector<Rational> generic(RationalSampler& rs, int k, const QParams& qp) {
  return rs.points(k, [&](const std::vector<Rational>& v) { return q_generic(v, qp); });
}

}  // namespace

TEST(UpperTri, Enumeration) {
  EXPECT_EQ(enumerate_upper(1, 3).size(), 1u);
  EXPECT_EQ(enumerate_upper(3, 2).size(), 27u);
  auto all = enumerate_upper(3, 1);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  UpperTriMatrix t(3);
  t.set(1, 2, 2);
  t.set(1, 3, 1);
  t.set(2, 3, 3);
  EXPECT_EQ(t.plus(1), 3);
  EXPECT_EQ(t.minus(3), 4);
  EXPECT_EQ(t.total(), 6);
  EXPECT_EQ(t.max_entry(), 3);
  EXPECT_EQ(shift_exponents(t, 2), (std::vector<int>{3, 2 + 3 - 2, 4 - 4}));
}

TEST(RowFactor, ZeroIsOne) {
  QParams qp(R(1, 2), 2);
  RationalSampler rs(1);
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(c_row<Rational>(std::vector<int>(static_cast<size_t>(n), 0), generic(rs, n, qp), qp), 1);
}

TEST(RowFactor, OneRowClosedForm) {
  RationalSampler rs(2);
  for (int th = 1; th <= 3; ++th) {
    QParams qp(R(1, 2), th);
    for (int i = 0; i < 25; ++i) {
      Rational u = generic(rs, 1, qp)[0];
      for (int n = 0; n <= th + 1; ++n) EXPECT_EQ(c_row<Rational>({n}, {u}, qp), jing_jozefiak(n, u, qp));
    }
  }
}

TEST(RowFactor, DeterminantFormAgrees) {
  RationalSampler rs(3);
  for (int th = 1; th <= 3; ++th) {
    QParams qp(R(2, 3), th);
    for (int n = 1; n <= 3; ++n)
      for (int i = 0; i < 5; ++i) {
        std::vector<int> taus;
        for (int k = 0; k < n; ++k) taus.push_back(static_cast<int>(rs.uniform(0, th - 1)));
        auto us = generic(rs, n, qp);
        EXPECT_EQ(c_row<Rational>(taus, us, qp), c_row_literal<Rational>(taus, us, qp, false));
      }
  }
}

TEST(RowFactor, DeterminantFormPoleAtTheta) {
  QParams qp(R(1, 2), 2);
  RationalSampler rs(4);
  auto us = generic(rs, 2, qp);
  EXPECT_THROW(c_row_literal<Rational>({2, 0}, us, qp, false), PoleError);
  EXPECT_NE(c_row_regularized({2, 0}, us, qp), 0);
}

TEST(RowFactor, ThetaOneSigns) {
  QParams qp(R(1, 3), 1);
  RationalSampler rs(5);
  for (int i = 0; i < 10; ++i)
    for (int mask = 0; mask < 8; ++mask) {
      std::vector<int> taus{mask & 1, (mask >> 1) & 1, (mask >> 2) & 1};
      int s = taus[0] + taus[1] + taus[2];
      EXPECT_EQ(c_row<Rational>(taus, generic(rs, 3, qp), qp), s % 2 ? -1 : 1);
    }
}

TEST(RowFactor, VanishingAboveTheta) {
  RationalSampler rs(6);
  for (int th = 1; th <= 3; ++th) {
    QParams qp(R(1, 2), th);
    auto u1 = generic(rs, 1, qp);
    EXPECT_EQ(c_row<Rational>({th + 1}, u1, qp), 0);
    EXPECT_NE(c_row<Rational>({th}, u1, qp), 0);
    EXPECT_EQ(c_row_regularized({0, th + 2}, generic(rs, 2, qp), qp), 0);
    EXPECT_TRUE(c_row_vanishing_check({th + 1, 0, 1}, generic(rs, 3, qp), qp));
  }
}

TEST(CTau, ZeroSignsAndVanishing) {
  RationalSampler rs(7);
  QParams q2(R(1, 2), 2), q1(R(1, 2), 1);
  for (int m = 1; m <= 3; ++m) EXPECT_EQ(c_tau_regularized(UpperTriMatrix(m), generic(rs, m, q2), q2), 1);
  for (int v = 0; v <= 1; ++v) {
    UpperTriMatrix t(2);
    t.set(1, 2, v);
    EXPECT_EQ(c_tau_regularized(t, generic(rs, 2, q1), q1), v ? -1 : 1);
  }
  UpperTriMatrix big(3);
  big.set(1, 3, 3);
  EXPECT_EQ(c_tau_regularized(big, generic(rs, 3, q2), q2), 0);
}

TEST(ThetaRecursion, Points) {
  EXPECT_TRUE(a_theta_recursion_check(QParams(R(1, 2), 2), R(3), R(5)));
  EXPECT_TRUE(a_theta_recursion_check(QParams(R(1, 3), 3), R(2, 7), R(-5, 3)));
  RationalSampler rs(8);
  QParams qp(R(1, 2), 1);
  for (int i = 0; i < 5; ++i) {
    auto x = generic(rs, 2, qp);
    EXPECT_TRUE(a_theta_recursion_check(qp, x[0], x[1]));
  }
}

TEST(JacobiTrudi, Edges) {
  QParams qp(R(1, 2), 2);
  EXPECT_EQ(jacobi_trudi_Q({0, 0, 0}, 3, qp), LaurentPoly::constant(3, 1));
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(jacobi_trudi_Q({n, 0}, 2, qp), g_poly(n, 2, qp));
}

TEST(JacobiTrudi, MatchesBranchingOracle) {
  for (int th = 1; th <= 2; ++th) {
    QParams qp(R(1, 3), th);
    for (int N = 1; N <= 3; ++N)
      for (const Signature& lam : partitions_up_to(N, 5))
        EXPECT_EQ(jacobi_trudi_Q(lam, N, qp), macdonald_poly(lam, N, qp) * b_lambda(lam, qp)) << lam.str();
  }
}

TEST(JacobiTrudi, LargerEntryBoundAddsNothing) {
  QParams qp(R(1, 2), 2);
  for (const Signature& lam : partitions_up_to(3, 3))
    EXPECT_EQ(jacobi_trudi_Q_bounded(lam, 3, qp, 3), jacobi_trudi_Q(lam, 3, qp)) << lam.str();
}
