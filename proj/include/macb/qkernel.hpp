#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "macb/scalar.hpp"

namespace macb {

class QParams {
 public:
  QParams(Rational q, int theta);
  static QParams parse(const std::string& q, int theta);

  const Rational& q() const { return q_; }
  const Rational& t() const { return t_; }
  int theta() const { return theta_; }

  // q^k for any integer k.
  Rational qpow(long k) const { return rpow(q_, k); }
  std::string key() const;

  friend bool operator==(const QParams& a, const QParams& b) {
    return a.theta_ == b.theta_ && a.q_ == b.q_;
  }

 private:
  Rational q_;
  int theta_;
  Rational t_;
};

// Interval-style real: |value - true| <= error_bound. Every operation adds
// a relative rounding slack on top of the propagated error.
class CertifiedReal {
 public:
  using Float = boost::multiprecision::mpfr_float_100;

  CertifiedReal() : value_(0), err_(0) {}
  CertifiedReal(Float v, Float err);
  static CertifiedReal exact(const Rational& r);
  static CertifiedReal exact_zero() { return CertifiedReal(); }

  const Float& value() const { return value_; }
  const Float& error_bound() const { return err_; }

  std::string value_str(int digits = 40) const;
  std::string error_str() const;
  double to_double() const { return value_.convert_to<double>(); }

  // True when r lies inside [value - err - slack, value + err + slack].
  bool contains(const Rational& r, const Float& slack = 0) const;
  // |a - b| minus the two error bounds (<= 0 means compatible).
  static Float gap(const CertifiedReal& a, const CertifiedReal& b);

  CertifiedReal operator-() const { return CertifiedReal(-value_, err_); }
  friend CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b);
  CertifiedReal& operator+=(const CertifiedReal& b) { return *this = *this + b; }
  CertifiedReal& operator*=(const CertifiedReal& b) { return *this = *this * b; }

  static Float to_float(const Rational& r);
  static Float slack_of(const Float& v);

 private:
  Float value_;
  Float err_;
};

Rational q_number(long n, const QParams& qp);
Rational q_factorial(long n, const QParams& qp);
Rational qpoch_finite(const Rational& z, long n, const QParams& qp);
// (z;q)_n with base q^{-1}; used by the finite q-binomial identity.
Rational qpoch_finite_inv(const Rational& z, long n, const QParams& qp);

// Smallest K with |z| q^K <= 1/2 and 2|z|q^K/(1-q) < eps.
long qpoch_truncation_depth(const Rational& z, const QParams& qp, double eps);

CertifiedReal qpoch_infinite(const Rational& z, const QParams& qp, double eps);
CertifiedReal qpoch_infinite_at_depth(const Rational& z, const QParams& qp, long K);
// Same product for a certified argument (needed for q^x with x non-integer).
CertifiedReal qpoch_infinite(const CertifiedReal& z, const QParams& qp, double eps);

// (z q^k;q)_inf / (z;q)_inf as a finite product.
Rational qpoch_ratio_integer_gap(const Rational& z, long k, const QParams& qp);

CertifiedReal q_gamma(const Rational& x, const QParams& qp, double eps);

Rational q_binomial_partial(const Rational& a, const Rational& z, long terms, const QParams& qp);

// Left-hand side of the finite q-binomial identity; equals (z;q^{-1})_M.
Rational finite_qbinomial_sum(long M, const Rational& z, const QParams& qp);

}  // namespace macb
