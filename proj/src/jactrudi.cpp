#include "macb/jactrudi.hpp"

#include <functional>

#include "macb/gtcombin.hpp"
#include "macb/macpoly.hpp"

namespace macb {

size_t UpperTriMatrix::index(int i, int j) const {
  if (i < 1 || j > n_ || i >= j) throw DomainError("UpperTriMatrix: index outside the strict upper triangle");
  // row-major over the strict upper triangle
  int before = (i - 1) * n_ - (i - 1) * i / 2;
  return static_cast<size_t>(before + (j - i - 1));
}

int UpperTriMatrix::plus(int s) const {
  int r = 0;
  for (int i = s + 1; i <= n_; ++i) r += at(s, i);
  return r;
}

int UpperTriMatrix::minus(int s) const {
  int r = 0;
  for (int i = 1; i < s; ++i) r += at(i, s);
  return r;
}

int UpperTriMatrix::total() const {
  int r = 0;
  for (int v : e_) r += v;
  return r;
}

int UpperTriMatrix::max_entry() const {
  int r = 0;
  for (int v : e_) r = std::max(r, v);
  return r;
}

std::vector<UpperTriMatrix> enumerate_upper(int n, int bound) {
  if (n < 1 || bound < 0) throw DomainError("enumerate_upper: need n >= 1 and bound >= 0");
  std::vector<UpperTriMatrix> out;
  UpperTriMatrix cur(n);
  std::vector<int> e(cur.entries().size(), 0);
  // odometer over the flattened entries; last entry varies fastest
  while (true) {
    UpperTriMatrix m(n);
    size_t k = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) m.set(i, j, e[k++]);
    out.push_back(m);
    size_t p = e.size();
    while (p > 0 && e[p - 1] == bound) e[--p] = 0;
    if (p == 0) break;
    ++e[p - 1];
  }
  return out;
}

Rational jing_jozefiak(int n, const Rational& u, const QParams& qp) {
  if (n < 0) throw DomainError("jing_jozefiak: negative n");
  const Rational& t = qp.t();
  const Rational& q = qp.q();
  Rational den = qpoch_finite(q * t * u, n, qp) * (Rational(1) - u);
  if (sgn(den) == 0) throw PoleError("pole: Jing-Jozefiak denominator vanishes");
  return rpow(t, n) * qpoch_finite(Rational(1) / t, n, qp) / qpoch_finite(q, n, qp) * qpoch_finite(u, n, qp) *
         (Rational(1) - qp.qpow(2L * n) * u) / den;
}

Rational c_row_regularized(const std::vector<int>& taus, const std::vector<Rational>& us, const QParams& qp) {
  try {
    return c_row<Rational>(taus, us, qp);
  } catch (const PoleError&) {
  }
  // multiplicative perturbation u_i (1 + d_i eps) with distinct d_i
  std::vector<Series> su;
  for (size_t i = 0; i < us.size(); ++i) su.push_back(Series::linear(us[i], us[i] * Rational(static_cast<long>(2 * i + 1))));
  return c_row<Series>(taus, su, qp).constant_term();
}

bool c_row_vanishing_check(const std::vector<int>& taus, const std::vector<Rational>& us, const QParams& qp) {
  bool big = false;
  for (int tk : taus) big = big || tk > qp.theta();
  Rational v = c_row_regularized(taus, us, qp);
  return big ? sgn(v) == 0 : true;
}

bool a_theta_recursion_check(const QParams& qp, const Rational& x1, const Rational& x2) {
  const int th = qp.theta();
  auto a = [&](int thp, int n, const Rational& y1, const Rational& y2) -> Rational {
    QParams qq(qp.q(), thp);
    Rational den(1);
    for (int i = 0; i < thp; ++i) den *= y1 - qp.qpow(i) * y2;
    if (sgn(den) == 0) throw PoleError("pole: x1 = q^i x2");
    return c_row_regularized({n}, {y1 / (qp.qpow(thp) * y2)}, qq) / den;
  };
  Rational lo(1), hi(1);
  for (int i = 0; i < th; ++i) {
    lo *= x1 - qp.qpow(i) * x2;
    hi *= x2 - qp.qpow(i) * x1;
  }
  if (a(th, 0, x1, x2) != Rational(1) / lo) return false;
  if (a(th, th, x1, x2) != Rational(1) / hi) return false;
  for (int n = 1; n <= th - 1; ++n) {
    Rational rhs = (a(th - 1, n, x1, qp.q() * x2) - a(th - 1, n - 1, qp.q() * x1, x2)) / (x1 - x2);
    if (a(th, n, x1, x2) != rhs) return false;
  }
  return true;
}

LaurentPoly jacobi_trudi_Q_bounded(const Signature& lam, int N, const QParams& qp, int bound) {
  if (lam.length() != N) throw DomainError("jacobi_trudi_Q: length mismatch");
  if (!lam.is_positive()) throw DomainError("jacobi_trudi_Q: positive signature required");
  LaurentPoly out(N);
  if (N == 1) return g_poly(lam[0], 1, qp);
  std::map<long, LaurentPoly> gcache;
  auto g = [&](long n) -> const LaurentPoly& {
    auto it = gcache.find(n);
    if (it == gcache.end()) it = gcache.emplace(n, g_poly(n, N, qp)).first;
    return it->second;
  };
  for (const UpperTriMatrix& tau : enumerate_upper(N, bound)) {
    std::vector<long> idx;
    bool ok = true;
    for (int s = 1; s <= N; ++s) {
      long v = lam[s - 1] + tau.plus(s) - tau.minus(s);
      if (v < 0) ok = false;
      idx.push_back(v);
    }
    if (!ok) continue;
    Rational coef(1);
    for (int s = 1; s <= N - 1 && sgn(coef) != 0; ++s) {
      std::vector<int> taus;
      std::vector<Rational> us;
      for (int i = 1; i <= s; ++i) {
        taus.push_back(tau.at(i, s + 1));
        long e = lam[i - 1] - lam[s];
        for (int j = s + 2; j <= N; ++j) e += tau.at(i, j) - tau.at(s + 1, j);
        us.push_back(qp.qpow(e) * rpow(qp.t(), s - i));
      }
      coef *= c_row_regularized(taus, us, qp);
    }
    if (sgn(coef) == 0) continue;
    LaurentPoly term = LaurentPoly::constant(N, coef);
    for (long v : idx) term = term * g(v);
    out += term;
  }
  return out;
}

LaurentPoly jacobi_trudi_Q(const Signature& lam, int N, const QParams& qp) {
  return jacobi_trudi_Q_bounded(lam, N, qp, qp.theta());
}

Rational c_tau_regularized(const UpperTriMatrix& tau, const std::vector<Rational>& xs, const QParams& qp) {
  try {
    return c_tau_product<Rational>(tau, xs, qp);
  } catch (const PoleError&) {
  }
  std::vector<Series> sx;
  for (size_t i = 0; i < xs.size(); ++i) sx.push_back(Series::linear(xs[i], xs[i] * Rational(static_cast<long>(i * i + 1))));
  return c_tau_product<Series>(tau, sx, qp).constant_term();
}

std::vector<int> shift_exponents(const UpperTriMatrix& tau, int theta) {
  std::vector<int> e;
  for (int i = 1; i <= tau.size(); ++i) e.push_back((i - 1) * theta + tau.plus(i) - tau.minus(i));
  return e;
}

}  // namespace macb
