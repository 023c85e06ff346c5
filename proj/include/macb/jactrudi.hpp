#pragma once

#include <vector>

#include "macb/laurent.hpp"
#include "macb/qkernel.hpp"
#include "macb/series.hpp"

namespace macb {

class Signature;

// Strictly upper-triangular n x n matrix of nonnegative integers.
class UpperTriMatrix {
 public:
  explicit UpperTriMatrix(int n = 0) : n_(n), e_(static_cast<size_t>(n * (n - 1) / 2 > 0 ? n * (n - 1) / 2 : 0), 0) {}
  int size() const { return n_; }
  int at(int i, int j) const { return e_[index(i, j)]; }  // 1-based, i < j
  void set(int i, int j, int v) { e_[index(i, j)] = v; }
  int plus(int s) const;   // sum_{i > s} tau_{s,i}
  int minus(int s) const;  // sum_{i < s} tau_{i,s}
  int total() const;
  int max_entry() const;
  const std::vector<int>& entries() const { return e_; }
  friend bool operator<(const UpperTriMatrix& a, const UpperTriMatrix& b) { return a.e_ < b.e_; }
  friend bool operator==(const UpperTriMatrix& a, const UpperTriMatrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }

 private:
  size_t index(int i, int j) const;
  int n_;
  std::vector<int> e_;
};

// All strictly upper-triangular n x n matrices with entries in {0..bound}, sorted.
std::vector<UpperTriMatrix> enumerate_upper(int n, int bound);

namespace detail {

template <class F>
F cdiv(const F& a, const F& b, const char* what) {
  if (is_zero(b)) throw PoleError(std::string("pole: vanishing denominator ") + what);
  return a / b;
}

template <class F>
F poch(const F& z, long n, const QParams& qp) {
  F r(Rational(1));
  Rational qi(1);
  for (long i = 0; i < n; ++i) {
    r *= F(Rational(1)) - z * F(qi);
    qi *= qp.q();
  }
  return r;
}

template <class F>
F det_leibniz(const std::vector<std::vector<F>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
  F acc(Rational(0));
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[static_cast<size_t>(i)] > p[static_cast<size_t>(j)]) ++inv;
    F term(Rational(inv % 2 ? -1 : 1));
    for (int i = 0; i < n; ++i) term *= m[static_cast<size_t>(i)][static_cast<size_t>(p[static_cast<size_t>(i)])];
    acc += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return acc;
}

// t^{tau-1} (q/t;q)_{tau-1} / (q;q)_{tau-1}; zero exactly when tau > theta
inline Rational c_row_scalar_prefactor(int tau, const QParams& qp) {
  Rational r = rpow(qp.t(), tau - 1);
  Rational z = qp.q() / qp.t(), qq = qp.q();
  for (int i = 0; i < tau - 1; ++i) {
    r *= (Rational(1) - z) / (Rational(1) - qq);
    z *= qp.q();
    qq *= qp.q();
  }
  return r;
}

}  // namespace detail

// C_{tau_1..tau_n}(u_1..u_n) in the subset-sum form that stays finite at
// tau_k = theta. F is Rational or Series.
template <class F>
F c_row(const std::vector<int>& taus, const std::vector<F>& us, const QParams& qp) {
  using detail::cdiv;
  using detail::poch;
  const size_t n = taus.size();
  if (us.size() != n) throw DomainError("c_row: taus and us differ in length");
  for (int tk : taus)
    if (tk < 0) throw DomainError("c_row: negative tau");
  const F one(Rational(1));
  const F t(qp.t());
  const F q(qp.q());
  std::vector<size_t> T;
  for (size_t k = 0; k < n; ++k)
    if (taus[k] > 0) T.push_back(k);
  if (T.empty()) return one;
  // vanishing prefactor: identically zero as a rational function
  Rational scal(1);
  for (size_t k : T) scal *= detail::c_row_scalar_prefactor(taus[k], qp);
  if (sgn(scal) == 0) return F(Rational(0));
  std::vector<F> v(n);
  for (size_t k = 0; k < n; ++k) v[k] = us[k] * F(qp.qpow(taus[k]));
  F res(scal);
  for (size_t k : T) res *= cdiv<F>(poch<F>(q * us[k], taus[k], qp), poch<F>(q * t * us[k], taus[k], qp), "(q t u_k;q)_tau");
  for (size_t i = 0; i < n; ++i) {
    if (taus[i] == 0) continue;
    for (size_t j = i + 1; j < n; ++j) {
      F a = cdiv<F>(q * us[i], t * us[j], "u_j");
      F b = cdiv<F>(q * us[i], us[j], "u_j");
      res *= cdiv<F>(poch<F>(a, taus[i], qp), poch<F>(b, taus[i], qp), "(q u_i/u_j;q)_tau");
      F c = cdiv<F>(t * us[i], v[j], "v_j");
      F d = cdiv<F>(us[i], v[j], "v_j");
      res *= cdiv<F>(poch<F>(c, taus[i], qp), poch<F>(d, taus[i], qp), "(u_i/v_j;q)_tau");
    }
  }
  F sum(Rational(0));
  const size_t m = T.size();
  for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
    std::vector<size_t> K, R;
    for (size_t a = 0; a < m; ++a) ((mask >> a) & 1 ? K : R).push_back(T[a]);
    long kk = static_cast<long>(K.size());
    F term(Rational(kk % 2 ? -1 : 1) * rpow(qp.t(), -(kk * (kk - 1) / 2)));
    for (size_t j : R) {
      Rational qj = qp.qpow(taus[j]);
      term *= F((qp.t() - qj) / (Rational(1) - qj));
    }
    for (size_t k : K)
      for (size_t j : R) term *= cdiv<F>(v[j] - v[k] / t, v[j] - v[k], "v_j - v_k");
    for (size_t k : K) {
      term *= cdiv<F>(one - t * v[k], one - v[k], "1 - v_k");
      for (size_t i : T)
        if (i != k) term *= cdiv<F>(us[i] - v[k], us[i] - v[k] / t, "u_i - v_k/t");
    }
    sum += term;
  }
  return res * sum;
}

// Literal determinant form. pair_uses_own_tau selects q^{tau_i} (as printed)
// versus q^{tau_j} inside the second pair ratio.
template <class F>
F c_row_literal(const std::vector<int>& taus, const std::vector<F>& us, const QParams& qp, bool pair_uses_own_tau) {
  using detail::cdiv;
  using detail::poch;
  const size_t n = taus.size();
  const F one(Rational(1));
  const F t(qp.t());
  const F q(qp.q());
  F res = one;
  for (size_t k = 0; k < n; ++k) {
    Rational s = rpow(qp.t(), taus[k]) * qpoch_finite(qp.q() / qp.t(), taus[k], qp) / qpoch_finite(qp.q(), taus[k], qp);
    res *= F(s) * cdiv<F>(poch<F>(q * us[k], taus[k], qp), poch<F>(q * t * us[k], taus[k], qp), "(q t u_k;q)_tau");
  }
  std::vector<F> v(n);
  for (size_t k = 0; k < n; ++k) v[k] = us[k] * F(qp.qpow(taus[k]));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      res *= cdiv<F>(poch<F>(cdiv<F>(q * us[i], t * us[j], "u_j"), taus[i], qp), poch<F>(cdiv<F>(q * us[i], us[j], "u_j"), taus[i], qp),
                  "(q u_i/u_j;q)_tau");
      F w = us[j] * F(qp.qpow(pair_uses_own_tau ? taus[i] : taus[j]));
      res *= cdiv<F>(poch<F>(cdiv<F>(t * us[i], w, "w"), taus[i], qp), poch<F>(cdiv<F>(us[i], w, "w"), taus[i], qp), "(u_i/w;q)_tau");
    }
  std::vector<std::vector<F>> M(n, std::vector<F>(n));
  F vand = one;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) vand *= v[i] - v[j];
  for (size_t i = 0; i < n; ++i) {
    F prod = cdiv<F>(one - t * v[i], one - v[i], "1 - v_i");
    for (size_t k = 0; k < n; ++k) prod *= cdiv<F>(us[k] - v[i], t * us[k] - v[i], "t u_k - v_i");
    for (size_t j = 0; j < n; ++j) {
      F pw = one;
      for (size_t e = 0; e + 1 + j < n; ++e) pw *= v[i];
      M[i][j] = pw * (one - F(rpow(qp.t(), static_cast<long>(j))) * prod);
    }
  }
  return res * cdiv<F>(detail::det_leibniz(M), vand, "Vandermonde");
}

// One-row closed form (Jing-Jozefiak).
Rational jing_jozefiak(int n, const Rational& u, const QParams& qp);

// c_row at rational points; falls back to a perturbation series when a
// removable 0/0 appears. Genuine poles still throw.
Rational c_row_regularized(const std::vector<int>& taus, const std::vector<Rational>& us, const QParams& qp);

bool c_row_vanishing_check(const std::vector<int>& taus, const std::vector<Rational>& us, const QParams& qp);

// arguments u_i of the s-th factor of C_tau(x_1..x_m)
template <class F>
std::vector<F> c_tau_arguments(const UpperTriMatrix& tau, int s, const std::vector<F>& xs, const QParams& qp) {
  const int m = tau.size();
  std::vector<F> us;
  for (int i = 1; i <= s; ++i) {
    long e = -qp.theta();
    for (int j = s + 2; j <= m; ++j) e += tau.at(i, j) - tau.at(s + 1, j);
    us.push_back(detail::cdiv<F>(xs[static_cast<size_t>(i - 1)], xs[static_cast<size_t>(s)], "x_{s+1}") * F(qp.qpow(e)));
  }
  return us;
}

template <class F>
F c_tau_product(const UpperTriMatrix& tau, const std::vector<F>& xs, const QParams& qp) {
  const int m = tau.size();
  if (static_cast<int>(xs.size()) != m) throw DomainError("c_tau_product: need m points");
  F r(Rational(1));
  for (int s = 1; s <= m - 1; ++s) {
    std::vector<int> taus;
    for (int i = 1; i <= s; ++i) taus.push_back(tau.at(i, s + 1));
    try {
      r *= c_row<F>(taus, c_tau_arguments<F>(tau, s, xs, qp), qp);
    } catch (const PoleError& e) {
      throw PoleError(std::string(e.what()) + " (factor s=" + std::to_string(s) + ")");
    }
  }
  return r;
}

bool a_theta_recursion_check(const QParams& qp, const Rational& x1, const Rational& x2);

LaurentPoly jacobi_trudi_Q(const Signature& lam, int N, const QParams& qp);
// Same sum with the entry bound set explicitly (theta by default).
LaurentPoly jacobi_trudi_Q_bounded(const Signature& lam, int N, const QParams& qp, int bound);

// C_tau(x_1..x_m) at rational points, perturbing the x_i when a removable
// 0/0 appears in one of the row factors.
Rational c_tau_regularized(const UpperTriMatrix& tau, const std::vector<Rational>& xs, const QParams& qp);

// Matrices in M_theta^{(m)} (entries 0..theta) with their shift exponents
// e_i = (i-1) theta + tau_i^+ - tau_i^-.
std::vector<int> shift_exponents(const UpperTriMatrix& tau, int theta);

}  // namespace macb
