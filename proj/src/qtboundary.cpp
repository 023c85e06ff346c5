#include "macb/qtboundary.hpp"

#include <algorithm>
#include <cmath>

#include "macb/jactrudi.hpp"
#include "macb/macpoly.hpp"
#include "macb/parallel.hpp"

namespace macb {

using Float = CertifiedReal::Float;

SparseMeasure SparseMeasure::delta(const Signature& lam) {
  SparseMeasure m(lam.length());
  m.add(lam, Rational(1));
  return m;
}

void SparseMeasure::add(const Signature& lam, const Rational& w) {
  if (lam.length() != level_) throw DomainError("SparseMeasure: signature " + lam.str() + " is not at level " + std::to_string(level_));
  if (sgn(w) == 0) return;
  auto [it, inserted] = masses_.emplace(lam, w);
  if (!inserted) {
    it->second += w;
    if (sgn(it->second) == 0) masses_.erase(it);
  }
}

Rational SparseMeasure::mass(const Signature& lam) const {
  auto it = masses_.find(lam);
  return it == masses_.end() ? Rational(0) : it->second;
}

Rational SparseMeasure::total() const {
  Rational s(0);
  for (const auto& kv : masses_) s += kv.second;
  return s;
}

bool SparseMeasure::is_nonnegative() const {
  return std::all_of(masses_.begin(), masses_.end(), [](const auto& kv) { return sgn(kv.second) >= 0; });
}

FinitePath::FinitePath(std::vector<Signature> levels) : levels_(std::move(levels)) {
  if (levels_.empty() || levels_[0].length() != 0) throw DomainError("FinitePath: must start at the empty signature");
  for (size_t k = 1; k < levels_.size(); ++k) {
    if (levels_[k].length() != static_cast<int>(k)) throw DomainError("FinitePath: level " + std::to_string(k) + " has wrong length");
    if (!interlaces(levels_[k - 1], levels_[k]))
      throw DomainError("FinitePath: " + levels_[k - 1].str() + " does not interlace " + levels_[k].str());
  }
}

FinitePath FinitePath::extended(const Signature& next) const {
  std::vector<Signature> v = levels_;
  v.push_back(next);
  return FinitePath(std::move(v));
}

Rational link_one_step(const Signature& lam, const Signature& mu, const QParams& qp) {
  const int N = mu.length();
  if (lam.length() != N + 1) throw DomainError("link_one_step: lengths must be N+1 and N");
  if (!interlaces(mu, lam)) return Rational(0);
  return psi_branching(lam, mu, qp) * rpow(qp.t(), mu.size()) * evaluation_principal(mu, N, qp) /
         evaluation_principal(lam, N + 1, qp);
}

Kernel::Kernel(int from, int to, RowFn row) : from_(from), to_(to), row_(std::make_shared<RowFn>(std::move(row))) {}

SparseMeasure Kernel::row(const Signature& lam) const {
  if (lam.length() != from_) throw DomainError("Kernel: row signature at the wrong level");
  return (*row_)(lam);
}

SparseMeasure Kernel::apply(const SparseMeasure& m) const {
  if (m.level() != from_) throw DomainError("Kernel::apply: measure at the wrong level");
  std::vector<std::pair<Signature, Rational>> src(m.masses().begin(), m.masses().end());
  auto parts = parallel_map<SparseMeasure>(src.size(), [&](size_t i) { return row(src[i].first); });
  SparseMeasure out(to_);
  for (size_t i = 0; i < src.size(); ++i)
    for (const auto& [mu, w] : parts[i].masses()) out.add(mu, w * src[i].second);
  return out;
}

Kernel compose(const Kernel& a, const Kernel& b) {
  if (a.to() != b.from()) throw DomainError("compose: level mismatch");
  return Kernel(a.from(), b.to(), [a, b](const Signature& lam) { return b.apply(a.row(lam)); });
}

Kernel link_kernel(int N, const QParams& qp) {
  if (N < 0) throw DomainError("link_kernel: negative level");
  return Kernel(N + 1, N, [qp](const Signature& lam) {
    SparseMeasure r(lam.length() - 1);
    for (const Signature& mu : interlacings_below(lam)) r.add(mu, link_one_step(lam, mu, qp));
    return r;
  });
}

Kernel link_compose(int N, int m, const QParams& qp) {
  if (!(N > m && m >= 0)) throw DomainError("link_compose: need N > m >= 0");
  Kernel k = link_kernel(N - 1, qp);
  for (int level = N - 2; level >= m; --level) k = compose(k, link_kernel(level, qp));
  return k;
}

SparseMeasure step_down(const SparseMeasure& m, const QParams& qp) {
  if (m.level() < 1) throw DomainError("step_down: level 0 has nothing below");
  return link_kernel(m.level() - 1, qp).apply(m);
}

SparseMeasure pushforward_delta(const Signature& lam, int m, const QParams& qp) {
  if (m < 0 || m > lam.length()) throw DomainError("pushforward_delta: need 0 <= m <= N");
  SparseMeasure cur = SparseMeasure::delta(lam);
  while (cur.level() > m) cur = step_down(cur, qp);
  return cur;
}

Rational generating_function_eval(const SparseMeasure& M, const std::vector<Rational>& xs, const QParams& qp) {
  const int m = M.level();
  if (static_cast<int>(xs.size()) != m) throw DomainError("generating_function_eval: need one point per level");
  std::vector<Rational> pt;
  for (int i = 0; i < m; ++i) pt.push_back(xs[static_cast<size_t>(i)] * rpow(qp.t(), i));
  Rational s(0);
  for (const auto& [lam, w] : M.masses()) s += w * macdonald_eval(lam, pt, qp) / evaluation_principal(lam, m, qp);
  return s;
}

std::map<Signature, Rational> fourier_coefficients(const SparseMeasure& M, const QParams& qp) {
  std::map<Signature, Rational> out;
  const int m = M.level();
  for (const auto& [lam, w] : M.masses()) {
    Rational scale = w / evaluation_principal(lam, m, qp);
    for (const auto& [kappa, c] : monomial_expansion(lam, m, qp)) out[kappa] += rpow(qp.t(), n_of(kappa)) * c * scale;
  }
  for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::map<Signature, Rational> fourier_coefficients_expanded(const SparseMeasure& M, const QParams& qp) {
  const int m = M.level();
  std::vector<Rational> tw;
  for (int i = 0; i < m; ++i) tw.push_back(rpow(qp.t(), i));
  LaurentPoly g(m);
  for (const auto& [lam, w] : M.masses())
    g += macdonald_poly(lam, m, qp).scale_vars(tw) * (w / evaluation_principal(lam, m, qp));
  std::map<Signature, Rational> out;
  for (const auto& [e, c] : g.terms())
    if (std::is_sorted(e.begin(), e.end(), std::greater<int>())) out.emplace(Signature(e), c);
  return out;
}

Rational path_probability(const SparseMeasure& top, const FinitePath& phi, const QParams& qp) {
  const int n = phi.length();
  if (top.level() != n) throw DomainError("path_probability: top measure level differs from path length");
  long below = 0;
  Rational r(1);
  for (int k = 1; k <= n; ++k) {
    below += phi.at(k - 1).size();
    r *= psi_branching(phi.at(k), phi.at(k - 1), qp);
  }
  return r * rpow(qp.t(), below) / evaluation_principal(phi.top(), n, qp) * top.mass(phi.top());
}

Rational path_probability_links(const SparseMeasure& top, const FinitePath& phi, const QParams& qp) {
  if (top.level() != phi.length()) throw DomainError("path_probability: top measure level differs from path length");
  Rational r = top.mass(phi.top());
  for (int k = phi.length(); k >= 1; --k) r *= link_one_step(phi.at(k), phi.at(k - 1), qp);
  return r;
}

// ---- limit functions ----

namespace {

Rational gbinom(long a, int j) {
  // a (a-1) ... (a-j+1) / j!, any integer a
  Rational r(1);
  for (int i = 0; i < j; ++i) r *= Rational(a - i) / Rational(i + 1);
  return r;
}

Float abs_float(const Rational& r) { return CertifiedReal::to_float(abs_r(r)); }

struct PoleLayout {
  std::vector<long> finite;  // poles from rows before the constant tail
  long base = 0;             // first pole of the tail block; all integers >= base follow
};

PoleLayout pole_layout(const NuSpec& nu, const QParams& qp) {
  const long th = qp.theta();
  const int L = nu.prefix_length();
  PoleLayout p;
  for (int r = 1; r < L; ++r)
    for (long s = 0; s < th; ++s) p.finite.push_back(nu.at(r) + th * (r - 1) + s);
  p.base = nu.at(L) + th * (L - 1);
  return p;
}

}  // namespace

CertifiedReal phi_nu_entire(const NuSpec& nu, const Rational& y, int j, const QParams& qp, double eps) {
  if (j < 0) throw DomainError("phi_nu_entire: negative derivative order");
  if (sgn(y) == 0) throw PoleError("pole: x = 0");
  const Rational& q = qp.q();
  PoleLayout pl = pole_layout(nu, qp);
  const long B = pl.base;
  Rational exact(0);
  for (long a : pl.finite) {
    Rational c = qpoch_finite(q, B - a - 1, qp);
    for (long b : pl.finite)
      if (b != a) c /= Rational(1) - qp.qpow(b - a);
    exact += c * gbinom(a, j) * rpow(y, a);
  }
  const Float ay = abs_float(y);
  const Float oneq = CertifiedReal::to_float(Rational(1) - q);
  const Float fq = CertifiedReal::to_float(q);
  const long kmax = 20000;
  Rational qk(1), poch(1), qtri(1);  // q^{k}, (q;q)_k, q^{binom(k+1,2)}
  for (long k = 0; k <= kmax; ++k) {
    if (k > 0) {
      qk *= q;
      poch *= Rational(1) - qk;
      qtri *= qk;
    }
    Rational coef = (k % 2 ? Rational(-1) : Rational(1)) * qtri / poch;
    for (long b : pl.finite) coef /= Rational(1) - qp.qpow(b - B - k);
    Rational term = coef * gbinom(B + k, j) * rpow(y, B + k);
    // remainder from k on is bounded by 2 |term_k| once the ratio is <= 1/2
    Float rho = ay * boost::multiprecision::pow(fq, k + 1) / oneq;
    bool tame = rho <= Float(0.25) && B + k >= 2L * j + 1;
    if (tame && Float(2) * abs_float(term) < Float(eps) / 2) {
      CertifiedReal out = CertifiedReal::exact(exact);
      return out + CertifiedReal(Float(0), Float(2) * abs_float(term));
    }
    exact += term;
  }
  throw DomainError("phi_nu_entire: |x| too large; tail needs more than " + std::to_string(kmax) + " terms");
}

CertifiedReal phi_nu_one(const NuSpec& nu, const Rational& x, const QParams& qp, double eps) {
  if (sgn(x) == 0) throw PoleError("pole: x = 0");
  for (long k = 1; k <= 4096; ++k)
    if (x == qp.qpow(-k)) throw PoleError("pole: x = q^-" + std::to_string(k));
  CertifiedReal g = phi_nu_entire(nu, x, 0, qp, eps / 4);
  CertifiedReal d = qpoch_infinite(x * qp.q(), qp, eps / 4);
  return g / d;
}

Float phi_nu_rowsum(const NuSpec& nu, const Rational& x, const QParams& qp, int R, int I) {
  const long th = qp.theta();
  const Float fq = CertifiedReal::to_float(qp.q());
  auto qf = [&](long k) { return boost::multiprecision::pow(fq, k); };
  auto inf_prod = [&](const Float& z) {
    Float p = 1, zq = z;
    for (int i = 0; i < 4000; ++i) {
      p *= Float(1) - zq;
      zq *= fq;
    }
    return p;
  };
  Float fx = CertifiedReal::to_float(x);
  Float sum = 0;
  for (int r = 1; r <= R; ++r)
    for (long s = 0; s < th; ++s) {
      long a = nu.at(r) + th * (r - 1) + s;
      Float term = boost::multiprecision::pow(fx, a);
      for (int i = 1; i <= I; ++i) {
        if (i == r) continue;
        long c = -nu.at(r) + nu.at(i) - s + th * (i - r);
        for (long k = c; k < c + th; ++k) term /= Float(1) - qf(k);
      }
      for (long jj = 0; jj < th; ++jj)
        if (jj != s) term /= Float(1) - qf(jj - s);
      sum += term;
    }
  return sum * inf_prod(fq) / inf_prod(fx * fq);
}

CertifiedReal phi_nu_multi(const NuSpec& nu, const std::vector<Rational>& xs, const QParams& qp, double eps) {
  const int m = static_cast<int>(xs.size());
  if (m < 1) throw DomainError("phi_nu_multi: need at least one point");
  if (m == 1) return phi_nu_one(nu, xs[0], qp, eps);
  const long th = qp.theta();
  const long c2 = static_cast<long>(m) * (m - 1) / 2, c3 = static_cast<long>(m) * (m - 1) * (m - 2) / 6;
  Rational pre = qp.qpow(-2 * th * th * c3 - th * (th + 1) / 2 * c2);
  for (int i = 0; i < m; ++i) {
    if (sgn(xs[static_cast<size_t>(i)]) == 0) throw PoleError("pole: x_" + std::to_string(i + 1) + " = 0");
    for (int j = i + 1; j < m; ++j)
      for (long k = 0; k < th; ++k) {
        Rational d = qp.qpow(k) * xs[static_cast<size_t>(j)] - xs[static_cast<size_t>(i)];
        if (sgn(d) == 0)
          throw PoleError("pole: x_" + std::to_string(i + 1) + " = q^" + std::to_string(k) + " x_" + std::to_string(j + 1));
        pre /= d;
      }
  }
  CertifiedReal den = CertifiedReal::exact(Rational(1));
  const Rational tm = rpow(qp.t(), m - 1);
  for (const Rational& x : xs) den *= qpoch_infinite(x * qp.q() * tm, qp, eps / (8 * m));
  const double inner_eps = eps / 64;
  std::map<std::pair<Rational, int>, CertifiedReal> gcache;
  auto G = [&](const Rational& y, int j) -> const CertifiedReal& {
    auto key = std::make_pair(y, j);
    auto it = gcache.find(key);
    if (it == gcache.end()) it = gcache.emplace(key, phi_nu_entire(nu, y, j, qp, inner_eps)).first;
    return it->second;
  };
  std::vector<UpperTriMatrix> taus = enumerate_upper(m, static_cast<int>(th));
  CertifiedReal sum;
  bool regular = true;
  try {
    for (const UpperTriMatrix& tau : taus) {
      Rational c = c_tau_product<Rational>(tau, xs, qp);
      if (sgn(c) == 0) continue;
      std::vector<int> e = shift_exponents(tau, static_cast<int>(th));
      CertifiedReal term = CertifiedReal::exact(c);
      for (int i = 0; i < m; ++i) term *= G(qp.qpow(e[static_cast<size_t>(i)]) * xs[static_cast<size_t>(i)], 0);
      sum += term;
    }
  } catch (const PoleError&) {
    regular = false;
  }
  if (!regular) {
    // x_i -> x_i (1 + d_i eps); C_tau becomes a Laurent series in eps, the
    // univariate factors are expanded with binomial weights, and the
    // eps^0 coefficient of the sum is the value.
    sum = CertifiedReal();
    std::vector<Series> sx;
    std::vector<long> d;
    for (int i = 0; i < m; ++i) {
      d.push_back(i + 1);
      sx.push_back(Series::linear(xs[static_cast<size_t>(i)], xs[static_cast<size_t>(i)] * Rational(d.back()), 12));
    }
    for (const UpperTriMatrix& tau : taus) {
      Series cs = c_tau_product<Series>(tau, sx, qp);
      if (cs.is_zero()) continue;
      std::vector<int> e = shift_exponents(tau, static_cast<int>(th));
      const int J = std::max(0, -cs.valuation());
      for (int jt = 0; jt <= J; ++jt) {
        Rational c = cs.coeff(-jt);
        if (sgn(c) == 0) continue;
        // P_jt = sum over j_1 + ... + j_m = jt of prod d_i^{j_i} G_{j_i}
        std::vector<int> js(static_cast<size_t>(m), 0);
        std::function<void(int, int, CertifiedReal)> rec = [&](int i, int left, CertifiedReal acc) {
          if (i == m - 1) {
            acc *= CertifiedReal::exact(rpow(Rational(d[static_cast<size_t>(i)]), left)) *
                   G(qp.qpow(e[static_cast<size_t>(i)]) * xs[static_cast<size_t>(i)], left);
            sum += CertifiedReal::exact(c) * acc;
            return;
          }
          for (int ji = 0; ji <= left; ++ji)
            rec(i + 1, left - ji,
                acc * CertifiedReal::exact(rpow(Rational(d[static_cast<size_t>(i)]), ji)) *
                    G(qp.qpow(e[static_cast<size_t>(i)]) * xs[static_cast<size_t>(i)], ji));
        };
        rec(0, jt, CertifiedReal::exact(Rational(1)));
      }
    }
  }
  return CertifiedReal::exact(pre) * sum / den;
}

SparseMeasure boundary_measure_approx(const NuSpec& nu, int m, int N, const QParams& qp) {
  if (!(N > m && m >= 1)) throw DomainError("boundary_measure_approx: need N > m >= 1");
  return pushforward_delta(stabilizing_signature(nu, N), m, qp);
}

CertifiedReal boundary_mass_lower_bound(int m, const QParams& qp, double eps) {
  QParams tb(qp.t(), 1);
  CertifiedReal p = qpoch_infinite(qp.t(), tb, eps / (qp.theta() * m + 1));
  CertifiedReal r = CertifiedReal::exact(Rational(1));
  for (int i = 0; i < qp.theta() * m; ++i) r *= p;
  return r;
}

Signature nu_prefix_signature(const NuSpec& nu, int m) {
  std::vector<int> p;
  for (int i = m; i >= 1; --i) p.push_back(nu.at(i));
  return Signature(p);
}

GeneratingCheck verify_generating_relation(const NuSpec& nu, int m, int N, const std::vector<Rational>& xs,
                                           const QParams& qp, double eps) {
  GeneratingCheck out;
  if (static_cast<int>(xs.size()) != m) throw DomainError("verify_generating_relation: need m points");
  SparseMeasure M = boundary_measure_approx(nu, m, N, qp);
  out.lhs = generating_function_eval(M, xs, qp);
  std::vector<Rational> ys;
  for (int i = 1; i <= m; ++i) ys.push_back(xs[static_cast<size_t>(i - 1)] * rpow(qp.t(), i - m));
  out.rhs = phi_nu_multi(nu, ys, qp, eps * 1e-3);
  Float diff = boost::multiprecision::abs(CertifiedReal::to_float(out.lhs) - out.rhs.value());
  out.residual = diff.convert_to<double>();
  out.passed = diff <= Float(eps) + out.rhs.error_bound();
  return out;
}

}  // namespace macb
