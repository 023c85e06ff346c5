#include "macb/qkernel.hpp"

#include <cmath>
#include <sstream>

namespace macb {

namespace {

using Float = CertifiedReal::Float;

mpfr_ptr raw(Float& f) { return f.backend().data(); }
mpfr_srcptr raw(const Float& f) { return f.backend().data(); }

// Relative inflation applied to every computed error term so that rounding
// inside the error arithmetic itself cannot make the bound optimistic.
const Float& inflate() {
  static const Float f = Float(1) + boost::multiprecision::pow(Float(2), -300);
  return f;
}

}  // namespace

QParams::QParams(Rational q, int theta) : q_(std::move(q)), theta_(theta) {
  q_.canonicalize();
  if (!(sgn(q_) > 0 && q_ < 1)) throw DomainError("q must satisfy 0 < q < 1, got " + to_string(q_));
  if (theta_ < 1) throw DomainError("theta must be a positive integer");
  t_ = rpow(q_, theta_);
}

QParams QParams::parse(const std::string& q, int theta) { return QParams(parse_rational(q), theta); }

std::string QParams::key() const { return to_string(q_) + "|" + std::to_string(theta_); }

// ---------------------------------------------------------------- CertifiedReal

CertifiedReal::CertifiedReal(Float v, Float err) : value_(std::move(v)), err_(std::move(err)) {
  if (err_ < 0) throw InternalError("negative error bound");
}

Float CertifiedReal::slack_of(const Float& v) {
  return boost::multiprecision::abs(v) * boost::multiprecision::pow(Float(2), -320);
}

Float CertifiedReal::to_float(const Rational& r) {
  Float f;
  mpfr_set_q(raw(f), r.get_mpq_t(), MPFR_RNDN);
  return f;
}

CertifiedReal CertifiedReal::exact(const Rational& r) {
  Float f;
  int ternary = mpfr_set_q(raw(f), r.get_mpq_t(), MPFR_RNDN);
  return CertifiedReal(f, ternary == 0 ? Float(0) : slack_of(f));
}

std::string CertifiedReal::value_str(int digits) const {
  return value_.str(digits, std::ios_base::fmtflags(0));
}

std::string CertifiedReal::error_str() const {
  if (err_ == 0) return "0";
  return err_.str(6, std::ios_base::scientific);
}

bool CertifiedReal::contains(const Rational& r, const Float& slack) const {
  Float d = boost::multiprecision::abs(value_ - to_float(r));
  return d <= err_ + slack + slack_of(value_);
}

Float CertifiedReal::gap(const CertifiedReal& a, const CertifiedReal& b) {
  return boost::multiprecision::abs(a.value_ - b.value_) - a.err_ - b.err_;
}

CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b) {
  Float v;
  int tern = mpfr_add(raw(v), raw(a.value_), raw(b.value_), MPFR_RNDN);
  Float e = (a.err_ + b.err_) * inflate();
  if (tern != 0) e += CertifiedReal::slack_of(v);
  return CertifiedReal(v, e);
}

CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b) { return a + (-b); }

CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b) {
  Float v;
  int tern = mpfr_mul(raw(v), raw(a.value_), raw(b.value_), MPFR_RNDN);
  Float e = (boost::multiprecision::abs(a.value_) * b.err_ + boost::multiprecision::abs(b.value_) * a.err_ +
             a.err_ * b.err_) *
            inflate();
  if (tern != 0) e += CertifiedReal::slack_of(v);
  return CertifiedReal(v, e);
}

CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b) {
  Float bb = boost::multiprecision::abs(b.value_);
  if (bb <= b.err_) throw PoleError("pole: certified divisor interval contains 0");
  Float v;
  int tern = mpfr_div(raw(v), raw(a.value_), raw(b.value_), MPFR_RNDN);
  // |a/b - A/B| <= (|a| eb + |b| ea) / (|b| (|b| - eb))
  Float e = (boost::multiprecision::abs(a.value_) * b.err_ + bb * a.err_) / (bb * (bb - b.err_)) * inflate();
  if (tern != 0) e += CertifiedReal::slack_of(v);
  return CertifiedReal(v, e);
}

// ---------------------------------------------------------------- exact q-numbers

Rational q_number(long n, const QParams& qp) {
  return (Rational(1) - qp.qpow(n)) / (Rational(1) - qp.q());
}

Rational q_factorial(long n, const QParams& qp) {
  if (n < 0) throw DomainError("q_factorial: negative argument " + std::to_string(n));
  Rational r(1);
  for (long k = 2; k <= n; ++k) r *= q_number(k, qp);
  return r;
}

Rational qpoch_finite(const Rational& z, long n, const QParams& qp) {
  if (n < 0) throw DomainError("qpoch_finite: negative length " + std::to_string(n));
  Rational r(1), zq = z;
  for (long i = 0; i < n; ++i) {
    r *= Rational(1) - zq;
    zq *= qp.q();
  }
  return r;
}

Rational qpoch_finite_inv(const Rational& z, long n, const QParams& qp) {
  if (n < 0) throw DomainError("qpoch_finite_inv: negative length");
  Rational r(1), zq = z, qi = Rational(1) / qp.q();
  for (long i = 0; i < n; ++i) {
    r *= Rational(1) - zq;
    zq *= qi;
  }
  return r;
}

Rational qpoch_ratio_integer_gap(const Rational& z, long k, const QParams& qp) {
  if (k >= 0) {
    Rational den(1), zq = z;
    for (long i = 0; i < k; ++i) {
      Rational f = Rational(1) - zq;
      if (is_zero(f))
        throw PoleError("pole: 1 - z q^" + std::to_string(i) + " = 0 with z = " + to_string(z));
      den *= f;
      zq *= qp.q();
    }
    return Rational(1) / den;
  }
  Rational num(1), qi = Rational(1) / qp.q(), zq = z * qi;
  for (long i = 1; i <= -k; ++i) {
    num *= Rational(1) - zq;
    zq *= qi;
  }
  return num;
}

// ---------------------------------------------------------------- infinite products

long qpoch_truncation_depth(const Rational& z, const QParams& qp, double eps) {
  if (!(eps > 0)) throw DomainError("eps must be positive");
  Rational az = abs_r(z), one_minus_q = Rational(1) - qp.q();
  Rational e = Rational(eps);
  Rational w = az;  // |z| q^K
  long K = 0;
  while (!(w <= Rational(1, 2) && Rational(2) * w / one_minus_q < e)) {
    w *= qp.q();
    ++K;
  }
  return K;
}

namespace {

bool hits_zero(const Rational& z, const QParams& qp) {
  if (sgn(z) <= 0) return false;
  Rational w = z;
  while (w >= 1) {
    if (w == 1) return true;
    w *= qp.q();
  }
  return false;
}

// tail multiplier: |prod_{i>=K}(1 - w_i) - 1| <= tau e^tau with tau = 2|z|q^K/(1-q)
Float tail_factor(const Float& abs_zqK, const Rational& q) {
  Float tau = Float(2) * abs_zqK / CertifiedReal::to_float(Rational(1) - q);
  return tau * boost::multiprecision::exp(tau) * inflate();
}

}  // namespace

CertifiedReal qpoch_infinite_at_depth(const Rational& z, const QParams& qp, long K) {
  if (is_zero(z)) return CertifiedReal::exact(Rational(1));
  if (hits_zero(z, qp)) return CertifiedReal::exact_zero();
  CertifiedReal p = CertifiedReal::exact(Rational(1));
  Rational zq = z;
  for (long i = 0; i < K; ++i) {
    p *= CertifiedReal::exact(Rational(1) - zq);
    zq *= qp.q();
  }
  Rational azq = abs_r(zq);
  if (azq > Rational(1, 2)) throw DomainError("qpoch_infinite: depth too small for tail bound");
  Float tail = (boost::multiprecision::abs(p.value()) + p.error_bound()) *
               tail_factor(CertifiedReal::to_float(azq), qp.q());
  return CertifiedReal(p.value(), p.error_bound() + tail);
}

CertifiedReal qpoch_infinite(const Rational& z, const QParams& qp, double eps) {
  if (is_zero(z)) return CertifiedReal::exact(Rational(1));
  if (hits_zero(z, qp)) return CertifiedReal::exact_zero();
  long K = qpoch_truncation_depth(z, qp, eps);
  // that depth only bounds the relative tail; extend until the absolute bound fits
  for (int guard = 0; guard < 100000; ++guard, ++K) {
    CertifiedReal r = qpoch_infinite_at_depth(z, qp, K);
    if (r.error_bound() <= Float(eps)) return r;
  }
  throw DomainError("qpoch_infinite: could not reach requested eps");
}

CertifiedReal qpoch_infinite(const CertifiedReal& z, const QParams& qp, double eps) {
  Float az = boost::multiprecision::abs(z.value()) + z.error_bound();
  CertifiedReal p = CertifiedReal::exact(Rational(1));
  CertifiedReal qc = CertifiedReal::exact(qp.q());
  CertifiedReal zq = z;
  Float qf = CertifiedReal::to_float(qp.q()), bound = az;
  Float one_minus_q = CertifiedReal::to_float(Rational(1) - qp.q());
  for (long i = 0; i < 1000000; ++i) {
    if (bound <= Float(0.5) && Float(2) * bound / one_minus_q < Float(eps)) {
      Float tail = (boost::multiprecision::abs(p.value()) + p.error_bound()) * tail_factor(bound, qp.q());
      if (tail <= Float(eps) / 2) return CertifiedReal(p.value(), p.error_bound() + tail);
    }
    p *= CertifiedReal::exact(Rational(1)) - zq;
    zq *= qc;
    bound *= qf;
  }
  throw DomainError("qpoch_infinite: could not reach requested eps");
}

CertifiedReal q_gamma(const Rational& x, const QParams& qp, double eps) {
  if (x.get_den() == 1) {
    if (x <= 0) throw PoleError("pole: q-Gamma at nonpositive integer " + to_string(x));
    return CertifiedReal::exact(q_factorial(x.get_num().get_si() - 1, qp));
  }
  // q^x and (1-q)^{1-x} through exp/log at working precision
  Float lq = boost::multiprecision::log(CertifiedReal::to_float(qp.q()));
  Float l1q = boost::multiprecision::log(CertifiedReal::to_float(Rational(1) - qp.q()));
  Float xf = CertifiedReal::to_float(x);
  Float qx = boost::multiprecision::exp(xf * lq);
  Float pre = boost::multiprecision::exp((Float(1) - xf) * l1q);
  Float rel = boost::multiprecision::pow(Float(2), -300);
  CertifiedReal qxc(qx, boost::multiprecision::abs(qx) * rel);
  CertifiedReal prec(pre, boost::multiprecision::abs(pre) * rel);
  double inner = eps * 1e-3;
  CertifiedReal num = qpoch_infinite(qp.q(), qp, inner);
  CertifiedReal den = qpoch_infinite(qxc, qp, inner);
  return prec * num / den;
}

// ---------------------------------------------------------------- q-binomial

Rational q_binomial_partial(const Rational& a, const Rational& z, long terms, const QParams& qp) {
  if (terms < 1) throw DomainError("q_binomial_partial: terms must be positive");
  // terminating case a = q^{-M}: the series is a polynomial in z, no |z| < 1 needed
  bool terminating = false;
  for (long M = 0; M <= 64 && !terminating; ++M)
    if (a == qp.qpow(-M)) terminating = true;
  if (!terminating && !(abs_r(z) < 1)) throw DomainError("q_binomial_partial: requires |z| < 1");
  Rational sum(0), term(1);
  Rational aq = a, qq = qp.q();
  for (long n = 0; n < terms; ++n) {
    sum += term;
    term *= (Rational(1) - aq) / (Rational(1) - qq) * z;
    if (is_zero(term)) break;
    aq *= qp.q();
    qq *= qp.q();
  }
  return sum;
}

Rational finite_qbinomial_sum(long M, const Rational& z, const QParams& qp) {
  if (M < 0) throw DomainError("finite_qbinomial_sum: negative M");
  Rational p = Rational(1) / qp.q();
  auto pp = [&](long n) { return qpoch_finite_inv(p, n, qp); };  // (p;p)_n
  Rational sum(0);
  for (long n = 0; n <= M; ++n) {
    Rational c = pp(M) / (pp(n) * pp(M - n));
    Rational sgnq = (n % 2 ? Rational(-1) : Rational(1)) * qp.qpow(-(n * (n - 1) / 2));
    sum += c * sgnq * rpow(z, n);
  }
  return sum;
}

}  // namespace macb
