#include "macb/macpoly.hpp"

#include <algorithm>
#include <functional>

namespace macb {

BranchingCache& BranchingCache::global() {
  static BranchingCache c;
  return c;
}

bool BranchingCache::find_poly(const std::string& key, LaurentPoly& out) const {
  std::lock_guard<std::mutex> lk(mu_);
  auto it = polys_.find(key);
  if (it == polys_.end()) return false;
  out = it->second;
  return true;
}

void BranchingCache::store_poly(const std::string& key, const LaurentPoly& p) {
  std::lock_guard<std::mutex> lk(mu_);
  polys_.emplace(key, p);
}

bool BranchingCache::find_scalar(const std::string& key, Rational& out) const {
  std::lock_guard<std::mutex> lk(mu_);
  auto it = scalars_.find(key);
  if (it == scalars_.end()) return false;
  out = it->second;
  return true;
}

void BranchingCache::store_scalar(const std::string& key, const Rational& r) {
  std::lock_guard<std::mutex> lk(mu_);
  scalars_.emplace(key, r);
}

void BranchingCache::clear() {
  std::lock_guard<std::mutex> lk(mu_);
  polys_.clear();
  scalars_.clear();
}

size_t BranchingCache::poly_count() const {
  std::lock_guard<std::mutex> lk(mu_);
  return polys_.size();
}

Rational qpow_poch_ratio(long a, long b, const QParams& qp) {
  // (q^a)_inf / (q^b)_inf = 1 / [ (q^a q^{b-a})_inf / (q^a)_inf ]
  if (a == b) return Rational(1);
  if (b > a) {
    Rational r(1);
    for (long i = a; i < b; ++i) {
      if (i == 0) return Rational(0);
      r *= Rational(1) - qp.qpow(i);
    }
    return r;
  }
  return Rational(1) / qpoch_ratio_integer_gap(qp.qpow(a), b - a, qp);
}

std::vector<Rational> principal_point(int N, const QParams& qp) {
  std::vector<Rational> v;
  Rational p(1);
  for (int i = 0; i < N; ++i) {
    v.push_back(p);
    p *= qp.t();
  }
  return v;
}

LaurentPoly monomial_symmetric(const Signature& lam, int N) {
  if (lam.length() != N) throw DomainError("monomial_symmetric: length mismatch");
  std::vector<int> e = lam.parts();
  std::sort(e.begin(), e.end());
  LaurentPoly p(N);
  do {
    p.add_term(e, Rational(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return p;
}

Rational psi_branching(const Signature& lam, const Signature& mu, const QParams& qp) {
  if (!interlaces(mu, lam)) throw DomainError("psi_branching: " + mu.str() + " does not interlace " + lam.str());
  std::string key = "psi|" + lam.str() + "|" + mu.str() + "|" + qp.key();
  Rational r;
  if (BranchingCache::global().find_scalar(key, r)) return r;
  r = 1;
  const long th = qp.theta();
  const int N = lam.length();
  // 1-based accessors
  auto L = [&](int i) -> long { return lam[i - 1]; };
  auto M = [&](int i) -> long { return mu[i - 1]; };
  for (int i = 1; i <= N - 1; ++i) {
    // every ratio below has gap lambda_i - mu_i; rows with equal parts contribute 1
    if (L(i) == M(i)) continue;
    for (int j = i; j <= N - 1; ++j) {
      long d1 = th * (j - i + 1), d0 = th * (j - i);
      r *= qpow_poch_ratio(M(i) - M(j) + d1, L(i) - M(j) + d1, qp);
      r *= qpow_poch_ratio(L(i) - L(j + 1) + d1, M(i) - L(j + 1) + d1, qp);
      r *= qpow_poch_ratio(L(i) - M(j) + 1 + d0, M(i) - M(j) + 1 + d0, qp);
      r *= qpow_poch_ratio(M(i) - L(j + 1) + 1 + d0, L(i) - L(j + 1) + 1 + d0, qp);
    }
  }
  BranchingCache::global().store_scalar(key, r);
  return r;
}

namespace {

LaurentPoly macdonald_poly_positive(const Signature& lam, const QParams& qp) {
  const int N = lam.length();
  std::string key = "P|" + lam.str() + "|" + qp.key();
  LaurentPoly out(N);
  if (BranchingCache::global().find_poly(key, out)) return out;
  if (N == 0) {
    out = LaurentPoly::constant(0, Rational(1));
  } else {
    for (const Signature& mu : interlacings_below(lam)) {
      LaurentPoly sub = macdonald_poly_positive(mu, qp).embed(N, 1);
      Exponent x1(static_cast<size_t>(N), 0);
      x1[0] = static_cast<int>(lam.size() - mu.size());
      out += sub.shift(x1) * psi_branching(lam, mu, qp);
    }
  }
  BranchingCache::global().store_poly(key, out);
  return out;
}

}  // namespace

LaurentPoly macdonald_poly(const Signature& lam, int N, const QParams& qp) {
  if (lam.length() != N) throw DomainError("macdonald_poly: length mismatch");
  int m = lam.min_part();
  if (m >= 0) return macdonald_poly_positive(lam, qp);
  // index stability: P_lambda = (x_1...x_N)^{-k} P_{lambda + k}
  LaurentPoly p = macdonald_poly_positive(a_k_shift(lam, -m), qp);
  return p.shift(Exponent(static_cast<size_t>(N), m));
}

Rational macdonald_eval(const Signature& lam, const std::vector<Rational>& ys, const QParams& qp) {
  const int N = lam.length();
  if (static_cast<int>(ys.size()) != N) throw DomainError("macdonald_eval: point has wrong dimension");
  std::map<Signature, Rational> memo;
  std::function<Rational(const Signature&)> rec = [&](const Signature& s) -> Rational {
    int n = s.length();
    if (n == 0) return Rational(1);
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    const Rational& y = ys[static_cast<size_t>(N - n)];
    Rational acc(0);
    for (const Signature& mu : interlacings_below(s))
      acc += psi_branching(s, mu, qp) * rpow(y, s.size() - mu.size()) * rec(mu);
    memo.emplace(s, acc);
    return acc;
  };
  return rec(lam);
}

Rational evaluation_principal(const Signature& lam, int N, const QParams& qp) {
  if (lam.length() != N) throw DomainError("evaluation_principal: length mismatch");
  std::string key = "EP|" + lam.str() + "|" + qp.key();
  Rational r;
  if (BranchingCache::global().find_scalar(key, r)) return r;
  const long th = qp.theta();
  r = rpow(qp.t(), n_of(lam));
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      long d = lam[i - 1] - lam[j - 1];
      r *= qpow_poch_ratio(d + th * (j - i), d + th * (j - i + 1), qp);
      r *= qpow_poch_ratio(th * (j - i + 1), th * (j - i), qp);
    }
  BranchingCache::global().store_scalar(key, r);
  return r;
}

Rational evaluation_principal_cells(const Signature& lam, int N, const QParams& qp) {
  if (!lam.is_positive()) throw DomainError("evaluation_principal_cells: positive signature required");
  Rational r = rpow(qp.t(), n_of(lam));
  const long th = qp.theta();
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= lam[i - 1]; ++j) {
      DiagramStats s = diagram_stats(lam, i, j);
      r *= (Rational(1) - qp.qpow(s.arm_colength + th * (N - s.leg_colength))) /
           (Rational(1) - qp.qpow(s.arm + th * (s.leg + 1)));
    }
  return r;
}

Rational b_lambda(const Signature& lam, const QParams& qp) {
  if (!lam.is_positive()) throw DomainError("b_lambda: positive signature required");
  Rational r(1);
  const long th = qp.theta();
  for (int i = 1; i <= lam.length(); ++i)
    for (int j = 1; j <= lam[i - 1]; ++j) {
      DiagramStats s = diagram_stats(lam, i, j);
      r *= (Rational(1) - qp.qpow(s.arm + th * (s.leg + 1))) / (Rational(1) - qp.qpow(s.arm + 1 + th * s.leg));
    }
  return r;
}

LaurentPoly dual_Q(const Signature& lam, int N, const QParams& qp) {
  return macdonald_poly(lam, N, qp) * b_lambda(lam, qp);
}

Rational dual_principal_cells(const Signature& lam, int N, const QParams& qp) {
  if (!lam.is_positive()) throw DomainError("dual_principal_cells: positive signature required");
  Rational r = rpow(qp.t(), n_of(lam));
  const long th = qp.theta();
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= lam[i - 1]; ++j) {
      DiagramStats s = diagram_stats(lam, i, j);
      r *= (Rational(1) - qp.qpow(s.arm_colength + th * (N - s.leg_colength))) /
           (Rational(1) - qp.qpow(s.arm + 1 + th * s.leg));
    }
  return r;
}

LaurentPoly g_poly(long n, int N, const QParams& qp) {
  if (n < 0) return LaurentPoly(N);
  std::vector<int> p(static_cast<size_t>(N), 0);
  p[0] = static_cast<int>(n);
  return dual_Q(Signature(p), N, qp);
}

std::map<Signature, Rational> monomial_expansion(const Signature& lam, int N, const QParams& qp) {
  std::map<Signature, Rational> out;
  const LaurentPoly p = macdonald_poly(lam, N, qp);
  for (const auto& [e, c] : p.terms()) {
    if (!std::is_sorted(e.begin(), e.end(), std::greater<int>())) continue;
    out.emplace(Signature(e), c);
  }
  return out;
}

bool check_index_argument_symmetry(const Signature& lam, const Signature& mu, int N, const QParams& qp) {
  if (!lam.is_positive() || !mu.is_positive() || lam.length() != N || mu.length() != N)
    throw DomainError("index-argument symmetry: two positive signatures of length N required");
  auto point = [&](const Signature& s) {
    std::vector<Rational> v;
    for (int i = 1; i <= N; ++i) v.push_back(qp.qpow(s[i - 1] + static_cast<long>(qp.theta()) * (N - i)));
    return v;
  };
  Rational lhs = macdonald_eval(lam, point(mu), qp) / evaluation_principal(lam, N, qp);
  Rational rhs = macdonald_eval(mu, point(lam), qp) / evaluation_principal(mu, N, qp);
  return lhs == rhs;
}

}  // namespace macb
