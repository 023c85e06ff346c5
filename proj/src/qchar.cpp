#include "macb/qchar.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "macb/macpoly.hpp"

namespace macb {

namespace {

long choose2(long n) { return n * (n - 1) / 2; }
long choose3(long n) { return n * (n - 1) * (n - 2) / 6; }

void require_qpow_free(const Rational& x, long lo, long hi, const QParams& qp, const std::string& what) {
  for (long j = lo; j <= hi; ++j)
    if (x == qp.qpow(j)) throw PoleError("pole: " + what + " = q^" + std::to_string(j));
}

Rational det_gauss(std::vector<std::vector<Rational>> a) {
  const size_t n = a.size();
  Rational det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (sgn(a[r][c]) == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

// char1(x) prod_{j=1}^{theta N - 1} (x - q^{j - theta})
LaurentPoly bracket_poly(const Signature& lam, int N, const QParams& qp) {
  LaurentPoly b = character_one_var(lam, N, qp);
  const long th = qp.theta();
  for (long j = 1; j <= th * N - 1; ++j) {
    LaurentPoly lin = LaurentPoly::variable(1, 0);
    lin += LaurentPoly::constant(1, -qp.qpow(j - th));
    b = b * lin;
  }
  return b;
}

}  // namespace

Rational character(const Signature& lam, int N, const std::vector<Rational>& xs, const QParams& qp) {
  const int m = static_cast<int>(xs.size());
  if (lam.length() != N) throw DomainError("character: signature length differs from N");
  if (m < 1 || m > N) throw DomainError("character: need 1 <= m <= N");
  std::vector<Rational> pt = xs;
  Rational p(1);
  for (int i = 0; i < N - m; ++i) {
    pt.push_back(p);
    p *= qp.t();
  }
  return macdonald_eval(lam, pt, qp) / evaluation_principal(lam, N, qp);
}

Rational character_in(CharConvention conv, const Signature& lam, int N, const std::vector<Rational>& xs,
                      const QParams& qp) {
  const int m = static_cast<int>(xs.size());
  const Rational& t = qp.t();
  std::vector<Rational> ys;
  switch (conv) {
    case CharConvention::Unitary:
      return character(lam, N, xs, qp);
    case CharConvention::Contour:
      if (m != 1) throw DomainError("contour convention is one-variable");
      // P(x, t, .., t^{N-1}) = t^{|lambda|} P(x/t, 1, .., t^{N-2})
      return rpow(t, lam.size()) * character(lam, N, {xs[0] / t}, qp);
    case CharConvention::Prelimit:
      for (const Rational& x : xs) ys.push_back(x * rpow(t, N - 1));
      return character(lam, N, ys, qp);
    case CharConvention::Generating:
      for (int i = 0; i < m; ++i) ys.push_back(xs[static_cast<size_t>(i)] * rpow(t, N - m + i));
      return character(lam, N, ys, qp);
  }
  throw InternalError("character_in: unknown convention");
}

std::vector<long> residue_poles(const Signature& lam, int N, const QParams& qp) {
  if (lam.length() != N) throw DomainError("residue_poles: length mismatch");
  const long th = qp.theta();
  std::vector<long> a;
  for (int i = 1; i <= N; ++i)
    for (long j = 0; j < th; ++j) a.push_back(lam[i - 1] + th * (N - i) + j);
  std::sort(a.begin(), a.end());
  if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw InternalError("residue_poles: coincident poles");
  return a;
}

Rational residue_character(const Signature& lam, int N, const Rational& x, const QParams& qp) {
  const long th = qp.theta();
  if (sgn(x) == 0) throw PoleError("pole: x = 0");
  require_qpow_free(x, 1, th * N - 1, qp, "x");
  std::vector<long> poles = residue_poles(lam, N, qp);
  Rational pre(1);
  for (long i = 1; i <= th * N - 1; ++i) pre *= (Rational(1) - qp.qpow(i)) / (x - qp.qpow(i));
  Rational sum(0);
  for (long a : poles) {
    Rational den(1);
    for (long b : poles)
      if (b != a) den *= Rational(1) - qp.qpow(a - b);
    sum += rpow(x, a) / den;
  }
  return pre * sum;
}

LaurentPoly character_one_var(const Signature& lam, int N, const QParams& qp) {
  if (lam.length() != N) throw DomainError("character_one_var: length mismatch");
  LaurentPoly out(1);
  Rational ep = evaluation_principal(lam, N, qp);
  for (const Signature& mu : interlacings_below(lam))
    out.add_term({static_cast<int>(lam.size() - mu.size())},
                 psi_branching(lam, mu, qp) * evaluation_principal(mu, N - 1, qp) / ep);
  return out;
}

void QShiftExpr::add(const Rational& c, const Exponent& shifts) {
  if (static_cast<int>(shifts.size()) != arity_) throw DomainError("QShiftExpr: arity mismatch");
  for (int s : shifts)
    if (s < 0) throw DomainError("QShiftExpr: negative shift exponent");
  terms_.push_back({c, shifts});
}

std::map<Exponent, Rational> QShiftExpr::to_degree_basis(const QParams& qp) const {
  std::map<Exponent, Rational> out;
  const Rational qm1 = qp.q() - 1;
  for (const QShiftTerm& term : terms_) {
    std::map<Exponent, Rational> part{{Exponent(static_cast<size_t>(arity_), 0), term.coeff}};
    for (int k = 0; k < arity_; ++k) {
      std::map<Exponent, Rational> next;
      int e = term.shifts[static_cast<size_t>(k)];
      for (const auto& [ex, c] : part)
        for (int j = 0; j <= e; ++j) {
          Exponent f = ex;
          f[static_cast<size_t>(k)] = j;
          next[f] += c * binomial(e, j) * rpow(qm1, j);
        }
      part = std::move(next);
    }
    for (const auto& [ex, c] : part) out[ex] += c;
  }
  for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

LaurentPoly qshift_var(int i, const LaurentPoly& f, const QParams& qp) {
  std::vector<Rational> cs(static_cast<size_t>(f.arity()), Rational(1));
  cs[static_cast<size_t>(i)] = qp.q();
  return f.scale_vars(cs);
}

LaurentPoly qshift_apply(const QShiftExpr& expr, const LaurentPoly& f, const QParams& qp) {
  if (expr.arity() != f.arity()) throw DomainError("qshift_apply: arity mismatch");
  LaurentPoly out(f.arity());
  for (const QShiftTerm& term : expr.terms()) {
    std::vector<Rational> cs;
    for (int s : term.shifts) cs.push_back(qp.qpow(s));
    out += f.scale_vars(cs) * term.coeff;
  }
  return out;
}

LaurentPoly qdeg_apply(int i, const LaurentPoly& f, const QParams& qp) {
  LaurentPoly out(f.arity());
  for (const auto& [e, c] : f.terms()) {
    long m = e[static_cast<size_t>(i)];
    out.add_term(e, c * (qp.qpow(m) - 1) / (qp.q() - 1));
  }
  return out;
}

LaurentPoly qdeg_power_apply(const Exponent& e, const LaurentPoly& f, const QParams& qp) {
  LaurentPoly out(f.arity());
  for (const auto& [ex, c] : f.terms()) {
    Rational w = c;
    for (size_t i = 0; i < e.size(); ++i) w *= rpow((qp.qpow(ex[i]) - 1) / (qp.q() - 1), e[i]);
    out.add_term(ex, w);
  }
  return out;
}

Rational multiplicative_character(const Signature& lam, int N, int m, const std::vector<Rational>& xs,
                                  const QParams& qp) {
  if (lam.length() != N) throw DomainError("multiplicative_character: length mismatch");
  if (m < 1 || m > N || static_cast<int>(xs.size()) != m) throw DomainError("multiplicative_character: need m points, 1 <= m <= N");
  const long th = qp.theta();
  Rational den(1);
  for (int i = 0; i < m; ++i) {
    const Rational& x = xs[static_cast<size_t>(i)];
    if (sgn(x) == 0) throw PoleError("pole: x_" + std::to_string(i + 1) + " = 0");
    for (long j = 1; j <= th * (N - m + 1) - 1; ++j) {
      if (x == qp.qpow(j - th)) throw PoleError("pole: x_" + std::to_string(i + 1) + " = q^" + std::to_string(j - th));
      den *= x - qp.qpow(j - th);
    }
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (long k = 0; k < th; ++k) {
        Rational d = xs[static_cast<size_t>(i)] - qp.qpow(k) * xs[static_cast<size_t>(j)];
        if (sgn(d) == 0)
          throw PoleError("pole: x_" + std::to_string(i + 1) + " = q^" + std::to_string(k) + " x_" + std::to_string(j + 1));
        den *= d;
      }
  Rational pre = qp.qpow(th * th * choose3(m + 1) - (N * th * th - choose2(th + 1)) * choose2(m)) *
                 rpow(qp.q() - 1, -th * choose2(m));
  for (int i = 1; i <= m; ++i) pre *= q_factorial(th * (N - i + 1) - 1, qp);
  LaurentPoly br = bracket_poly(lam, N, qp);
  const Rational fact = q_factorial(th * N - 1, qp);
  Rational sum(0);
  for (const UpperTriMatrix& tau : enumerate_upper(m, static_cast<int>(th))) {
    Rational c = c_tau_regularized(tau, xs, qp);
    if (sgn(c) == 0) continue;
    std::vector<int> e = shift_exponents(tau, static_cast<int>(th));
    for (int i = 0; i < m && sgn(c) != 0; ++i)
      c *= br.evaluate({qp.qpow(e[static_cast<size_t>(i)]) * xs[static_cast<size_t>(i)]}) / fact;
    sum += c;
  }
  return pre * sum / den;
}

IteratedResult two_var_iterated(const Signature& lam, int N, const std::vector<Rational>& xs, const QParams& qp) {
  if (lam.length() != N) throw DomainError("two_var_iterated: length mismatch");
  if (N < 2 || xs.size() != 2) throw DomainError("two_var_iterated: needs N >= 2 and two points");
  const long th = qp.theta();
  LaurentPoly b = bracket_poly(lam, N, qp);
  LaurentPoly g = b.embed(2, 0) * b.embed(2, 1);
  IteratedResult res;
  for (long s = 0; s < th; ++s) {
    LaurentPoly h = qdeg_apply(1, g, qp) - qdeg_apply(0, g, qp);
    if (!h.is_antisymmetric()) throw InternalError("two_var_iterated: intermediate not antisymmetric");
    g = divide_by_difference(h, 0, 1);
    if (!g.is_symmetric()) throw InternalError("two_var_iterated: quotient not symmetric");
    ++res.steps;
  }
  Rational den(1);
  for (const Rational& x : xs)
    for (long j = 1; j <= th * (N - 1) - 1; ++j) {
      if (x == qp.qpow(j - th)) throw PoleError("pole: x = q^" + std::to_string(j - th));
      den *= x - qp.qpow(j - th);
    }
  Rational pre = qp.qpow(-(N - 1) * th * th + choose2(th + 1)) * q_factorial(th * (N - 1) - 1, qp) /
                 q_factorial(th * N - 1, qp);
  res.value = pre * g.evaluate(xs) / den;
  return res;
}

Rational schur_bialternant(const Signature& lam, const std::vector<Rational>& xs) {
  const int N = static_cast<int>(xs.size());
  if (lam.length() != N) throw DomainError("schur_bialternant: length mismatch");
  Rational vand(1);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) vand *= xs[static_cast<size_t>(i)] - xs[static_cast<size_t>(j)];
  if (sgn(vand) == 0) throw PoleError("pole: coincident evaluation points");
  std::vector<std::vector<Rational>> a(static_cast<size_t>(N), std::vector<Rational>(static_cast<size_t>(N)));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = rpow(xs[static_cast<size_t>(i)], lam[j] + N - 1 - j);
  return det_gauss(std::move(a)) / vand;
}

LaurentPoly schur_poly(const Signature& lam, int N) {
  if (lam.length() != N) throw DomainError("schur_poly: length mismatch");
  int k = lam.min_part();
  Signature base = a_k_shift(lam, -k);
  std::vector<int> perm(static_cast<size_t>(N));
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly alt(N);
  do {
    int inv = 0;
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j)
        if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inv;
    Exponent e(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) {
      int j = perm[static_cast<size_t>(i)];
      e[static_cast<size_t>(i)] = base[j] + N - 1 - j;
    }
    alt.add_term(e, Rational(inv % 2 ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) alt = divide_by_difference(alt, i, j);
  return alt.shift(Exponent(static_cast<size_t>(N), k));
}

Rational schur_character(const Signature& lam, int N, int m, const std::vector<Rational>& xs, const QParams& qp) {
  if (qp.theta() != 1) throw DomainError("schur_character: theta must be 1");
  if (lam.length() != N || m < 1 || m > N || static_cast<int>(xs.size()) != m)
    throw DomainError("schur_character: need m points with 1 <= m <= N");
  std::vector<Rational> princ;
  for (int i = 0; i < N; ++i) princ.push_back(qp.qpow(i));
  const Rational norm = schur_bialternant(lam, princ);
  const Rational fact = q_factorial(N - 1, qp);
  auto bracket = [&](const Rational& y) -> Rational {
    Rational lin(1);
    for (long j = 1; j <= N - 1; ++j) lin *= y - qp.qpow(j - 1);
    if (sgn(lin) == 0) return Rational(0);  // the Schur factor is finite there
    std::vector<Rational> pt{y};
    for (int i = 0; i < N - 1; ++i) pt.push_back(qp.qpow(i));
    return schur_bialternant(lam, pt) / norm * lin / fact;
  };
  Rational den(1);
  for (int i = 0; i < m; ++i) {
    for (long j = 1; j <= N - m; ++j) den *= xs[static_cast<size_t>(i)] - qp.qpow(j - 1);
    for (int j = i + 1; j < m; ++j) den *= xs[static_cast<size_t>(i)] - xs[static_cast<size_t>(j)];
  }
  if (sgn(den) == 0) throw PoleError("pole: x_i = q^j or x_i = x_j");
  Rational pre = qp.qpow(choose3(m + 1) - (N - 1) * choose2(m)) * rpow(qp.q() - 1, -choose2(m));
  for (int i = 1; i <= m; ++i) pre *= q_factorial(N - i, qp);
  Rational sum(0);
  for (const auto& [e, sign] : signed_matrix_shift_expansion(m)) {
    Rational term(sign);
    for (int i = 0; i < m; ++i) term *= bracket(qp.qpow(e[static_cast<size_t>(i)]) * xs[static_cast<size_t>(i)]);
    sum += term;
  }
  return pre * sum / den;
}

std::map<Exponent, long> vandermonde_shift_expansion(int m) {
  std::map<Exponent, long> cur{{Exponent(static_cast<size_t>(m), 0), 1}};
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::map<Exponent, long> next;
      for (const auto& [e, c] : cur) {
        Exponent a = e, b = e;
        ++a[static_cast<size_t>(j)];
        ++b[static_cast<size_t>(i)];
        next[a] += c;
        next[b] -= c;
      }
      cur.clear();
      for (const auto& [e, c] : next)
        if (c != 0) cur.emplace(e, c);
    }
  return cur;
}

std::map<Exponent, long> signed_matrix_shift_expansion(int m) {
  std::map<Exponent, long> out;
  for (const UpperTriMatrix& tau : enumerate_upper(m, 1)) {
    std::vector<int> e = shift_exponents(tau, 1);
    out[e] += tau.total() % 2 ? -1 : 1;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Rational d_basis_coefficient(const std::array<int, 3>& i, const std::vector<Rational>& xs, const QParams& qp) {
  if (qp.theta() != 2 || xs.size() != 3) throw DomainError("d_basis_coefficient: theta = 2 and three points required");
  if (i[0] < 0 || i[1] < 0 || i[2] < 0 || i[0] + i[1] + i[2] > 5)
    throw DomainError("d_basis_coefficient: need nonnegative indices with sum <= 5");
  Rational f(0);
  for (const UpperTriMatrix& tau : enumerate_upper(3, 2)) {
    std::vector<int> e = shift_exponents(tau, 2);
    Rational w = binomial(e[0], i[0]) * binomial(e[1], i[1]) * binomial(e[2], i[2]);
    if (sgn(w) == 0) continue;
    f += w * c_tau_regularized(tau, xs, qp);
  }
  return f;
}

Rational d_basis_closed_410(const std::vector<Rational>& xs, const QParams& qp) {
  const Rational &q = qp.q(), &x1 = xs[0], &x2 = xs[1], &x3 = xs[2];
  Rational den = (q * x2 - x3) * (q * x1 - x3) * (q * x1 - x2);
  if (sgn(den) == 0) throw PoleError("pole: q x_i = x_j");
  return -(q - 1) * (x2 + x3) * (x1 - q * x3) * (x1 - q * x2) / den;
}

Rational d_basis_closed_211(const std::vector<Rational>& xs, const QParams& qp) {
  const Rational &q = qp.q(), &x1 = xs[0], &x2 = xs[1], &x3 = xs[2];
  Rational den = (q * x1 - x2) * (q * x1 - x3) * (q * x2 - x3);
  if (sgn(den) == 0) throw PoleError("pole: q x_i = x_j");
  return -(q - 1) * (q - 1) * (q + 1) * (x2 - x3) * (x1 * x1 + x2 * x3 + 2 * x1 * x2 + 2 * x1 * x3) / den;
}

std::pair<Rational, Rational> d_basis_top_consistency(const LaurentPoly& f, const std::vector<Rational>& xs,
                                                        const QParams& qp) {
  if (qp.theta() != 2 || xs.size() != 3 || f.arity() != 3) throw DomainError("d-basis consistency: theta = 2, m = 3 only");
  const Rational qm1 = qp.q() - 1;
  Rational shifted(0), top(0);
  for (const UpperTriMatrix& tau : enumerate_upper(3, 2)) {
    Rational c = c_tau_regularized(tau, xs, qp);
    std::vector<int> e = shift_exponents(tau, 2);
    std::vector<Rational> ys;
    for (int k = 0; k < 3; ++k) ys.push_back(qp.qpow(e[static_cast<size_t>(k)]) * xs[static_cast<size_t>(k)]);
    shifted += c * f.evaluate(ys);
    top += c * qdeg_power_apply(e, f, qp).evaluate(xs);
  }
  shifted *= rpow(qm1, -6);
  Rational rest(0);
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; a + b <= 5; ++b)
      for (int c = 0; a + b + c <= 5; ++c) {
        Rational fi = d_basis_coefficient({a, b, c}, xs, qp);
        if (sgn(fi) == 0) continue;
        rest += fi * rpow(qm1, a + b + c - 6) * qdeg_power_apply({a, b, c}, f, qp).evaluate(xs);
      }
  return {shifted, top + rest};
}

}  // namespace macb
