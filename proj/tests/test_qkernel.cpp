#include <gtest/gtest.h>

#include <cmath>

#include "macb/qkernel.hpp"
#include "macb/sampling.hpp"

using namespace macb;

namespace {

Rational R(long a, long b = 1) { return Rational(a) / Rational(b); }
QParams half(int theta = 1) { return QParams(R(1, 2), theta); }

// Euler's pentagonal series for (q;q)_inf, summed in long double.
long double euler_pentagonal(long double q) {
  long double s = 1;
  for (int k = 1; k < 60; ++k) {
    long double sign = (k % 2) ? -1 : 1;
    s += sign * (std::pow(q, k * (3 * k - 1) / 2.0L) + std::pow(q, k * (3 * k + 1) / 2.0L));
  }
  return s;
}

}  // namespace

TEST(Scalar, ParsePrintRoundTrip) {
  for (const char* s : {"0", "1/2", "-7/3", "12"}) EXPECT_EQ(to_string(parse_rational(s)), s);
  EXPECT_EQ(parse_rational("4/6"), R(2, 3));
  EXPECT_THROW(parse_rational("x"), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
}

TEST(Scalar, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(3, -1), 0);
}

TEST(QParams, Validation) {
  EXPECT_THROW(QParams(R(1), 1), DomainError);
  EXPECT_THROW(QParams(R(3, 2), 1), DomainError);
  EXPECT_THROW(QParams(R(1, 2), 0), DomainError);
  EXPECT_EQ(half(2).t(), R(1, 4));
}

TEST(QKernel, QNumber) {
  EXPECT_EQ(q_number(0, half()), 0);
  EXPECT_EQ(q_number(1, half()), 1);
  EXPECT_EQ(q_number(3, half()), R(7, 4));
}

TEST(QKernel, QFactorial) {
  EXPECT_EQ(q_factorial(0, half()), 1);
  EXPECT_EQ(q_factorial(2, half()), R(3, 2));
  EXPECT_EQ(q_factorial(3, QParams(R(1, 3), 1)), R(52, 27));
}

TEST(QKernel, FinitePochhammer) {
  EXPECT_EQ(qpoch_finite(R(5, 7), 0, half()), 1);
  EXPECT_EQ(qpoch_finite(R(1), 3, half()), 0);
  EXPECT_EQ(qpoch_finite(R(1, 2), 2, half()), R(3, 8));
  EXPECT_THROW(qpoch_finite(R(1, 2), -1, half()), DomainError);
}

TEST(QKernel, FinitePochhammerRecurrence) {
  RationalSampler rs(11);
  QParams qp(R(2, 3), 1);
  for (int i = 0; i < 20; ++i) {
    Rational z = rs.next();
    for (long n = 0; n < 6; ++n)
      EXPECT_EQ(qpoch_finite(z, n + 1, qp), qpoch_finite(z, n, qp) * (1 - z * qp.qpow(n)));
  }
}

TEST(QKernel, RatioTelescopes) {
  RationalSampler rs(12);
  QParams qp = half();
  for (int i = 0; i < 10; ++i) {
    Rational z = rs.next();
    if (q_generic({z}, qp) == false) continue;
    for (long j = -3; j <= 3; ++j)
      for (long k = -3; k <= 3; ++k)
        EXPECT_EQ(qpoch_ratio_integer_gap(z, j + k, qp),
                  qpoch_ratio_integer_gap(z, j, qp) * qpoch_ratio_integer_gap(z * qp.qpow(j), k, qp));
  }
  EXPECT_EQ(qpoch_ratio_integer_gap(R(3), 0, qp), 1);
  EXPECT_EQ(qpoch_ratio_integer_gap(qp.q(), 1, qp), 2);
}

TEST(QKernel, InfinitePochhammerAgainstPentagonal) {
  CertifiedReal v = qpoch_infinite(R(1, 2), half(), 1e-6);
  EXPECT_NEAR(v.to_double(), 0.288788, 1e-6);
  for (Rational q : std::vector<Rational>{R(1, 2), R(2, 3), R(9, 10)}) {
    QParams qp(q, 1);
    CertifiedReal c = qpoch_infinite(q, qp, 1e-15);
    EXPECT_LT(c.error_bound(), 1e-15);
    EXPECT_NEAR(c.to_double(), static_cast<double>(euler_pentagonal(q.get_d())), 1e-13);
  }
}

TEST(QKernel, InfinitePochhammerZeroIsExact) {
  CertifiedReal v = qpoch_infinite(R(0), half(), 1e-9);
  EXPECT_EQ(v.value(), 1);
  EXPECT_EQ(v.error_bound(), 0);
}

TEST(QKernel, InfiniteRatioMatchesFinite) {
  QParams qp = half();
  double eps = 1e-20;
  CertifiedReal a = qpoch_infinite(qp.q(), qp, eps), b = qpoch_infinite(qp.qpow(4), qp, eps);
  CertifiedReal ratio = a / b;
  EXPECT_TRUE(ratio.contains(qpoch_finite(qp.q(), 3, qp), CertifiedReal::Float(2 * eps)));
}

TEST(QKernel, ShiftByRatioCrossCheck) {
  QParams qp(R(2, 3), 1);
  RationalSampler rs(5);
  for (int i = 0; i < 10; ++i) {
    Rational z = rs.next(5, 9);
    if (!q_generic({z}, qp)) continue;
    long k = rs.uniform(-3, 3);
    CertifiedReal lhs = CertifiedReal::exact(qpoch_ratio_integer_gap(z, k, qp)) * qpoch_infinite(z, qp, 1e-25);
    CertifiedReal rhs = qpoch_infinite(z * qp.qpow(k), qp, 1e-25);
    EXPECT_LE(CertifiedReal::gap(lhs, rhs), 0);
  }
}

TEST(QKernel, TruncationDepthRule) {
  QParams qp = half();
  Rational z(3);
  double eps = 1e-10;
  long K = qpoch_truncation_depth(z, qp, eps);
  auto ok = [&](long k) {
    double zk = 3 * std::pow(0.5, static_cast<double>(k));
    return zk <= 0.5 && 2 * zk / 0.5 < eps;
  };
  EXPECT_TRUE(ok(K));
  EXPECT_FALSE(ok(K - 1));
}

TEST(QKernel, DoubleDepthStability) {
  RationalSampler rs(99);
  for (Rational q : std::vector<Rational>{R(1, 2), R(3, 4)}) {
    QParams qp(q, 1);
    for (int i = 0; i < 25; ++i) {
      Rational z = rs.next(9, 3);
      long K = qpoch_truncation_depth(z, qp, 1e-14);
      CertifiedReal a = qpoch_infinite_at_depth(z, qp, K), b = qpoch_infinite_at_depth(z, qp, 2 * K);
      EXPECT_LE(boost::multiprecision::abs(a.value() - b.value()), a.error_bound());
    }
  }
}

TEST(QKernel, QGammaIntegers) {
  QParams qp = half();
  EXPECT_EQ(q_gamma(R(1), qp, 1e-20).value(), 1);
  EXPECT_EQ(q_gamma(R(3), qp, 1e-20).value(), CertifiedReal::to_float(R(3, 2)));
  for (long n = 0; n < 6; ++n) EXPECT_TRUE(q_gamma(Rational(n + 1), qp, 1e-20).contains(q_factorial(n, qp)));
  EXPECT_THROW(q_gamma(R(0), qp, 1e-10), PoleError);
  EXPECT_THROW(q_gamma(R(-2), qp, 1e-10), PoleError);
}

TEST(QKernel, QGammaFunctionalEquation) {
  QParams qp(R(2, 3), 1);
  for (Rational x : std::vector<Rational>{R(1, 2), R(7, 3), R(-1, 2), R(5, 4)}) {
    CertifiedReal g1 = q_gamma(x + 1, qp, 1e-25), g0 = q_gamma(x, qp, 1e-25);
    double qx = std::pow(2.0 / 3.0, x.get_d());
    double expect = (1 - qx) / (1 - 2.0 / 3.0);
    EXPECT_NEAR((g1 / g0).to_double(), expect, 1e-13) << to_string(x);
  }
}

TEST(QKernel, QBinomialPartial) {
  QParams qp = half();
  EXPECT_EQ(q_binomial_partial(R(1), R(1, 3), 10, qp), 1);
  EXPECT_EQ(q_binomial_partial(R(5, 7), R(0), 10, qp), 1);
  EXPECT_THROW(q_binomial_partial(R(1, 3), R(2), 10, qp), DomainError);
  for (long m : {-2L, 0L, 1L, 3L}) {
    Rational a = qp.qpow(m), z = R(1, 3);
    CertifiedReal rhs = qpoch_infinite(a * z, qp, 1e-30) / qpoch_infinite(z, qp, 1e-30);
    double gap = boost::multiprecision::abs(CertifiedReal::to_float(q_binomial_partial(a, z, 200, qp)) - rhs.value())
                     .convert_to<double>();
    EXPECT_LT(gap, 1e-12) << m;
  }
}

TEST(QKernel, FiniteQBinomialIdentity) {
  QParams qp = half();
  Rational z(3);
  // a = q^{-2}, M = 2: both sides equal (z;q^{-1})_2 = (1-z)(1-z/q)
  Rational expect = (1 - z) * (1 - z / qp.q());
  EXPECT_EQ(finite_qbinomial_sum(2, z, qp), expect);
  EXPECT_EQ(qpoch_finite_inv(z, 2, qp), expect);
  // the terminating series itself sums to (z/q; q^{-1})_M
  for (long M = 0; M <= 6; ++M)
    EXPECT_EQ(q_binomial_partial(qp.qpow(-M), z, M + 1, qp), qpoch_finite_inv(z / qp.q(), M, qp));
}

TEST(CertifiedReal, ArithmeticWidensBounds) {
  CertifiedReal a(CertifiedReal::Float(1), CertifiedReal::Float("1e-20"));
  CertifiedReal b = CertifiedReal::exact(R(1, 3));
  CertifiedReal c = a * b + a;
  EXPECT_GE(c.error_bound(), CertifiedReal::Float("1e-20"));
  EXPECT_TRUE(c.contains(R(4, 3)));
  EXPECT_THROW(a / CertifiedReal::exact(R(0)), PoleError);
}
