#include "macb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "macb/jactrudi.hpp"
#include "macb/macpoly.hpp"
#include "macb/parallel.hpp"
#include "macb/qchar.hpp"
#include "macb/qtboundary.hpp"
#include "macb/sampling.hpp"

namespace macb {

namespace {

using Float = CertifiedReal::Float;

double exact_gap(const Rational& a, const Rational& b) { return std::fabs(Rational(a - b).get_d()); }

const std::vector<Rational>& residue_xs() {
  static const std::vector<Rational> xs{Rational(2), Rational(3) / 2, Rational(-1) / 3, Rational(5) / 7};
  return xs;
}

// a braced list of gmp expressions would hold dangling temporaries
const std::vector<Rational>& test_qs() {
  static const std::vector<Rational> qs{Rational(1) / 2, Rational(2) / 3};
  return qs;
}

std::string sig(const Signature& s) { return "(" + s.str() + ")"; }

// Runs fn(i) for every case index; each returns a list of (ok, label, residual).
struct Outcome {
  bool ok = true;
  std::string what;
  double residual = 0;
};

template <class Fn>
void sweep(SuiteReport& rep, size_t n, Fn fn) {
  auto res = parallel_map<std::vector<Outcome>>(n, [&](size_t i) {
    try {
      return fn(i);
    } catch (const std::exception& e) {
      return std::vector<Outcome>{{false, std::string("exception: ") + e.what(), 0}};
    }
  });
  for (const auto& v : res)
    for (const auto& o : v) rep.record(o.ok, o.what, o.residual);
}

std::vector<Signature> bounded_abs(int N, int total) {
  std::vector<Signature> out;
  for (const Signature& s : signatures_in_box(N, -total, total)) {
    long a = 0;
    for (int p : s.parts()) a += std::abs(p);
    if (a <= total) out.push_back(s);
  }
  return out;
}

}  // namespace

void SuiteReport::record(bool ok, const std::string& what, double residual) {
  ++cases;
  if (ok) {
    ++passed;
  } else {
    ++failed;
    if (failures.size() < 10) failures.push_back(what);
  }
  if (std::isfinite(residual)) max_residual = std::max(max_residual, residual);
}

void SuiteReport::merge(const SuiteReport& o) {
  cases += o.cases;
  passed += o.passed;
  failed += o.failed;
  max_residual = std::max(max_residual, o.max_residual);
  for (const auto& f : o.failures)
    if (failures.size() < 10) failures.push_back(f);
}

SuiteReport check_residue_grid(const VerifyConfig& cfg) {
  SuiteReport rep{"residue_grid"};
  rep.seed = cfg.seed;
  struct Case {
    Signature lam;
    int N, theta;
    Rational q;
  };
  std::vector<Case> cases;
  int maxN = cfg.max_N > 0 ? cfg.max_N : 4;
  for (const Rational& q : test_qs())
    for (int th = 1; th <= 3; ++th)
      for (int N = 1; N <= maxN; ++N)
        for (const Signature& lam : signatures_in_box(N, -2, 3)) cases.push_back({lam, N, th, q});
  sweep(rep, cases.size(), [&](size_t i) {
    const Case& c = cases[i];
    QParams qp(c.q, c.theta);
    std::vector<Outcome> out;
    for (const Rational& x : residue_xs()) {
      Rational lhs = character_in(CharConvention::Contour, c.lam, c.N, {x}, qp);
      Rational rhs = residue_character(c.lam, c.N, x, qp);
      out.push_back({lhs == rhs, "residue " + sig(c.lam) + " theta=" + std::to_string(c.theta) + " q=" + to_string(c.q) + " x=" + to_string(x),
                     exact_gap(lhs, rhs)});
    }
    return out;
  });
  return rep;
}

SuiteReport check_zero_signature(const VerifyConfig& cfg) {
  SuiteReport rep{"zero_signature"};
  rep.seed = cfg.seed;
  for (const Rational& q : test_qs())
    for (int th = 1; th <= 3; ++th)
      for (int N = 1; N <= 6; ++N) {
        QParams qp(q, th);
        Signature zero(std::vector<int>(static_cast<size_t>(N), 0));
        for (const Rational& x : residue_xs()) {
          Rational a = character_in(CharConvention::Contour, zero, N, {x}, qp);
          Rational b = residue_character(zero, N, x, qp);
          std::string what = "zero N=" + std::to_string(N) + " theta=" + std::to_string(th) + " x=" + to_string(x);
          rep.record(a == 1, what + " (character side)", exact_gap(a, 1));
          rep.record(b == 1, what + " (residue side)", exact_gap(b, 1));
        }
      }
  return rep;
}

SuiteReport check_multiplicative(const VerifyConfig& cfg) {
  SuiteReport rep{"multiplicative"};
  rep.seed = cfg.seed;
  const int pts = cfg.points > 0 ? cfg.points : 10;
  int maxN = cfg.max_N > 0 ? cfg.max_N : 4;
  struct Case {
    Signature lam;
    int N, m, theta;
    uint64_t seed;
  };
  std::vector<Case> cases;
  uint64_t k = 0;
  for (int th = 1; th <= 2; ++th)
    for (int m = 2; m <= 3; ++m)
      for (int N = m; N <= maxN; ++N)
        for (const Signature& lam : bounded_abs(N, 4)) cases.push_back({lam, N, m, th, cfg.seed * 1000003u + k++});
  sweep(rep, cases.size(), [&](size_t i) {
    const Case& c = cases[i];
    QParams qp(Rational(1) / 2, c.theta);
    RationalSampler rs(c.seed);
    std::vector<Outcome> out;
    for (int p = 0; p < pts; ++p) {
      auto xs = rs.points(c.m, [&](const std::vector<Rational>& v) { return q_generic(v, qp); });
      Rational a = multiplicative_character(c.lam, c.N, c.m, xs, qp);
      Rational b = character(c.lam, c.N, xs, qp);
      out.push_back({a == b, "multiplicative " + sig(c.lam) + " m=" + std::to_string(c.m) + " theta=" + std::to_string(c.theta),
                     exact_gap(a, b)});
    }
    return out;
  });
  return rep;
}

SuiteReport check_iterated(const VerifyConfig& cfg) {
  SuiteReport rep{"iterated_two_variable"};
  rep.seed = cfg.seed;
  const int pts = cfg.points > 0 ? cfg.points : 2;
  int maxN = cfg.max_N > 0 ? cfg.max_N : 4;
  struct Case {
    Signature lam;
    int N, theta;
    uint64_t seed;
  };
  std::vector<Case> cases;
  uint64_t k = 0;
  for (int th = 1; th <= 3; ++th)
    for (int N = 2; N <= maxN; ++N)
      for (const Signature& lam : bounded_abs(N, 3)) cases.push_back({lam, N, th, cfg.seed * 7919u + k++});
  sweep(rep, cases.size(), [&](size_t i) {
    const Case& c = cases[i];
    QParams qp(Rational(1) / 2, c.theta);
    RationalSampler rs(c.seed);
    std::vector<Outcome> out;
    for (int p = 0; p < pts; ++p) {
      auto xs = rs.points(2, [&](const std::vector<Rational>& v) { return q_generic(v, qp); });
      std::string what = "iterated " + sig(c.lam) + " theta=" + std::to_string(c.theta);
      IteratedResult r = two_var_iterated(c.lam, c.N, xs, qp);
      out.push_back({r.steps == c.theta, what + " division steps", 0});
      Rational ch = character(c.lam, c.N, xs, qp);
      out.push_back({r.value == ch, what + " vs character", exact_gap(r.value, ch)});
      Rational mc = multiplicative_character(c.lam, c.N, 2, xs, qp);
      out.push_back({r.value == mc, what + " vs multiplicative", exact_gap(r.value, mc)});
    }
    return out;
  });
  return rep;
}

SuiteReport check_schur(const VerifyConfig& cfg) {
  SuiteReport rep{"schur"};
  rep.seed = cfg.seed;
  const int pts = cfg.points > 0 ? cfg.points : 10;
  QParams qp(Rational(1) / 2, 1);
  for (int N = 1; N <= 4; ++N)
    for (const Signature& lam : partitions_up_to(N, 5))
      rep.record(macdonald_poly(lam, N, qp) == schur_poly(lam, N), "schur polynomial " + sig(lam));
  for (int m = 2; m <= 4; ++m)
    rep.record(vandermonde_shift_expansion(m) == signed_matrix_shift_expansion(m),
               "shift-operator expansion m=" + std::to_string(m));
  RationalSampler rs(cfg.seed);
  for (int N = 1; N <= 4; ++N)
    for (int m = 1; m <= std::min(3, N); ++m)
      for (const Signature& lam : partitions_up_to(N, 3))
        for (int p = 0; p < pts; ++p) {
          auto xs = rs.points(m, [&](const std::vector<Rational>& v) { return q_generic(v, qp); });
          Rational a = schur_character(lam, N, m, xs, qp), b = character(lam, N, xs, qp);
          rep.record(a == b, "schur operator " + sig(lam) + " m=" + std::to_string(m), exact_gap(a, b));
        }
  return rep;
}

SuiteReport check_d_basis(const VerifyConfig& cfg) {
  SuiteReport rep{"d_basis"};
  rep.seed = cfg.seed;
  const int pts = cfg.points > 0 ? cfg.points : 20;
  for (const Rational& q : test_qs()) {
    QParams qp(q, 2);
    RationalSampler rs(cfg.seed);
    for (int p = 0; p < pts; ++p) {
      auto xs = rs.points(3, [&](const std::vector<Rational>& v) { return q_generic(v, qp); });
      std::string at = " q=" + to_string(q) + " point " + std::to_string(p);
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b)
          for (int c = 0; a + b + c <= 2; ++c) {
            Rational f = d_basis_coefficient({a, b, c}, xs, qp);
            rep.record(sgn(f) == 0, "f_" + std::to_string(a) + std::to_string(b) + std::to_string(c) + " = 0" + at,
                       std::fabs(f.get_d()));
          }
      Rational f410 = d_basis_coefficient({4, 1, 0}, xs, qp), c410 = d_basis_closed_410(xs, qp);
      rep.record(f410 == c410, "f_410 closed form" + at, exact_gap(f410, c410));
      Rational f211 = d_basis_coefficient({2, 1, 1}, xs, qp), c211 = d_basis_closed_211(xs, qp);
      rep.record(f211 == c211, "f_211 closed form" + at, exact_gap(f211, c211));
    }
  }
  return rep;
}

SuiteReport check_jacobi_trudi(const VerifyConfig& cfg) {
  SuiteReport rep{"jacobi_trudi"};
  rep.seed = cfg.seed;
  struct Case {
    Signature lam;
    int theta;
  };
  std::vector<Case> cases;
  for (int th = 1; th <= 2; ++th)
    for (int N = 1; N <= 3; ++N)
      for (const Signature& lam : partitions_up_to(N, 5)) cases.push_back({lam, th});
  sweep(rep, cases.size(), [&](size_t i) {
    const Case& c = cases[i];
    QParams qp(Rational(1) / 2, c.theta);
    int N = c.lam.length();
    LaurentPoly jt = jacobi_trudi_Q(c.lam, N, qp);
    LaurentPoly q = dual_Q(c.lam, N, qp);
    return std::vector<Outcome>{{jt == q, "jacobi-trudi " + sig(c.lam) + " theta=" + std::to_string(c.theta), 0}};
  });
  return rep;
}

SuiteReport check_row_factor_identities(const VerifyConfig& cfg) {
  SuiteReport rep{"row_factor_identities"};
  rep.seed = cfg.seed;
  const int pts = cfg.points > 0 ? cfg.points : 10;
  RationalSampler rs(cfg.seed);
  for (int th = 1; th <= 3; ++th) {
    QParams qp(Rational(1) / 2, th);
    auto generic = [&](const std::vector<Rational>& v) { return q_generic(v, qp); };
    for (int p = 0; p < pts; ++p) {
      // vanishing once an entry exceeds theta
      for (int n = 1; n <= 3; ++n) {
        std::vector<int> taus;
        for (int k = 0; k < n; ++k) taus.push_back(static_cast<int>(rs.uniform(0, th + 2)));
        taus[static_cast<size_t>(rs.uniform(0, n - 1))] = static_cast<int>(rs.uniform(th + 1, th + 2));
        auto us = rs.points(n, generic);
        Rational v = c_row_regularized(taus, us, qp);
        rep.record(sgn(v) == 0, "vanishing theta=" + std::to_string(th) + " n=" + std::to_string(n), std::fabs(v.get_d()));
        try {
          Rational lit = c_row_literal<Rational>(taus, us, qp, false);
          rep.record(sgn(lit) == 0, "vanishing (determinant form) theta=" + std::to_string(th), std::fabs(lit.get_d()));
        } catch (const PoleError&) {
          // an entry equal to theta alongside; the determinant form is 0/0 there
        }
      }
      // both forms agree below theta
      for (int n = 1; n <= 3; ++n) {
        std::vector<int> taus;
        for (int k = 0; k < n; ++k) taus.push_back(static_cast<int>(rs.uniform(0, th - 1)));
        auto us = rs.points(n, generic);
        Rational a = c_row<Rational>(taus, us, qp), b = c_row_literal<Rational>(taus, us, qp, false);
        rep.record(a == b, "subset-sum vs determinant form theta=" + std::to_string(th), exact_gap(a, b));
      }
      // one row
      for (int n = 0; n <= th; ++n) {
        Rational u = rs.points(1, generic)[0];
        Rational a = c_row<Rational>({n}, {u}, qp), b = jing_jozefiak(n, u, qp);
        rep.record(a == b, "one-row closed form n=" + std::to_string(n), exact_gap(a, b));
      }
      // recursion in theta
      auto x = rs.points(2, generic);
      rep.record(a_theta_recursion_check(qp, x[0], x[1]), "theta recursion theta=" + std::to_string(th));
    }
  }
  // theta = 1 signs
  QParams q1(Rational(1) / 2, 1);
  for (int p = 0; p < pts; ++p)
    for (int n = 1; n <= 3; ++n)
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> taus;
        int tot = 0;
        for (int k = 0; k < n; ++k) {
          taus.push_back((mask >> k) & 1);
          tot += taus.back();
        }
        auto us = rs.points(n, [&](const std::vector<Rational>& v) { return q_generic(v, q1); });
        Rational v = c_row<Rational>(taus, us, q1);
        rep.record(v == (tot % 2 ? -1 : 1), "theta=1 sign n=" + std::to_string(n), exact_gap(v, tot % 2 ? -1 : 1));
      }
  return rep;
}

SuiteReport check_links(const VerifyConfig& cfg) {
  SuiteReport rep{"links"};
  rep.seed = cfg.seed;
  int maxN = cfg.max_N > 0 ? cfg.max_N : 5;
  struct Case {
    Signature lam;
    int theta;
  };
  std::vector<Case> cases;
  for (int th = 1; th <= 2; ++th)
    for (int N = 0; N < maxN; ++N)
      for (const Signature& lam : signatures_in_box(N + 1, -3, 3)) cases.push_back({lam, th});
  sweep(rep, cases.size(), [&](size_t i) {
    const Case& c = cases[i];
    QParams qp(Rational(1) / 2, c.theta);
    std::vector<Outcome> out;
    Rational total(0);
    bool equi = true;
    for (const Signature& mu : interlacings_below(c.lam)) {
      Rational l = link_one_step(c.lam, mu, qp);
      total += l;
      for (int k : {-2, 1})
        if (link_one_step(a_k_shift(c.lam, k), a_k_shift(mu, k), qp) != l) equi = false;
      if (sgn(l) < 0) equi = false;
    }
    std::string what = sig(c.lam) + " theta=" + std::to_string(c.theta);
    out.push_back({total == 1, "stochastic " + what, exact_gap(total, 1)});
    out.push_back({equi, "shift equivariant and nonnegative " + what, 0});
    return out;
  });
  return rep;
}

SuiteReport check_coherency(const VerifyConfig& cfg) {
  SuiteReport rep{"coherency"};
  rep.seed = cfg.seed;
  const int pts = cfg.points > 0 ? cfg.points : 5;
  int maxN = cfg.max_N > 0 ? cfg.max_N : 4;
  struct Case {
    Signature lam;
    int theta;
    uint64_t seed;
  };
  std::vector<Case> cases;
  uint64_t k = 0;
  for (int th = 1; th <= 2; ++th)
    for (int N = 1; N <= maxN; ++N)
      for (const Signature& lam : signatures_in_box(N + 1, -1, 2)) cases.push_back({lam, th, cfg.seed * 104729u + k++});
  sweep(rep, cases.size(), [&](size_t i) {
    const Case& c = cases[i];
    QParams qp(Rational(1) / 2, c.theta);
    RationalSampler rs(c.seed);
    const int N = c.lam.length() - 1;
    SparseMeasure top = SparseMeasure::delta(c.lam);
    SparseMeasure down = step_down(top, qp);
    std::vector<Outcome> out;
    out.push_back({down.total() == 1 && down.is_nonnegative(), "pushforward is a probability " + sig(c.lam), 0});
    for (int p = 0; p < pts; ++p) {
      auto xs = rs.points(N, [](const std::vector<Rational>&) { return true; });
      std::vector<Rational> ext{Rational(1)};
      ext.insert(ext.end(), xs.begin(), xs.end());
      Rational a = generating_function_eval(down, xs, qp), b = generating_function_eval(top, ext, qp);
      out.push_back({a == b, "coherency " + sig(c.lam) + " theta=" + std::to_string(c.theta), exact_gap(a, b)});
    }
    return out;
  });
  return rep;
}

SuiteReport check_mass_bound(const VerifyConfig& cfg) {
  SuiteReport rep{"mass_bound"};
  rep.seed = cfg.seed;
  int maxN = cfg.max_N > 0 ? cfg.max_N : 12;
  std::vector<NuSpec> nus;
  for (int L = 1; L <= 3; ++L)
    for (const Signature& s : signatures_in_box(L, -2, 2)) {
      std::vector<int> p(s.parts().rbegin(), s.parts().rend());
      nus.emplace_back(p);
    }
  std::vector<int> Ns;
  for (int N : {4, 6, 9, 12})
    if (N <= maxN) Ns.push_back(N);
  struct Case {
    NuSpec nu;
    int N, theta;
  };
  std::vector<Case> cases;
  for (int th = 1; th <= 2; ++th)
    for (const NuSpec& nu : nus)
      for (int N : Ns) cases.push_back({nu, N, th});
  const double tol = 1e-10;
  sweep(rep, cases.size(), [&](size_t i) {
    const Case& c = cases[i];
    QParams qp(Rational(1) / 2, c.theta);
    std::vector<Outcome> out;
    // one pushforward chain serves every m <= 3
    SparseMeasure cur = SparseMeasure::delta(stabilizing_signature(c.nu, c.N));
    while (cur.level() > 3) cur = step_down(cur, qp);
    for (int m = 3; m >= 1; --m) {
      if (m < 3) cur = step_down(cur, qp);
      CertifiedReal bound = boundary_mass_lower_bound(m, qp, 1e-30);
      Rational mass = cur.mass(nu_prefix_signature(c.nu, m));
      Float slack = CertifiedReal::to_float(mass) - (bound.value() - bound.error_bound());
      bool ok = slack >= Float(-tol) && cur.total() == 1;
      // support bounds: mu_m >= nu_1, ..., mu_1 >= nu_m
      for (const auto& [mu, w] : cur.masses())
        for (int j = 1; j <= m; ++j)
          if (mu[j - 1] < c.nu.at(m - j + 1)) ok = false;
      out.push_back({ok, "mass bound nu=" + c.nu.str() + " m=" + std::to_string(m) + " N=" + std::to_string(c.N) +
                             " theta=" + std::to_string(c.theta),
                     slack < 0 ? -slack.convert_to<double>() : 0});
    }
    return out;
  });
  return rep;
}

SuiteReport check_phi(const VerifyConfig& cfg) {
  SuiteReport rep{"phi"};
  rep.seed = cfg.seed;
  QParams qp(Rational(1) / 2, 2);
  NuSpec nu({0, 0, 1, 2});
  const Rational x(1, 2);
  {
    const int N = 25;
    Rational pre = character_in(CharConvention::Prelimit, stabilizing_signature(nu, N), N, {x}, qp);
    CertifiedReal phi = phi_nu_one(nu, x, qp, 1e-20);
    double gap = boost::multiprecision::abs(CertifiedReal::to_float(pre) - phi.value()).convert_to<double>();
    rep.record(gap <= 1e-8, "prelimit N=25 vs limit", gap);
  }
  {
    GeneratingCheck g = verify_generating_relation(nu, 1, 25, {x}, qp, 1e-6);
    rep.record(g.passed && g.residual <= 1e-6, "generating relation m=1 N=25", g.residual);
  }
  {
    CertifiedReal one = phi_nu_one(nu, Rational(1), qp, 1e-20);
    double gap = boost::multiprecision::abs(one.value() - 1).convert_to<double>();
    rep.record(gap <= 1e-10, "limit at x=1", gap);
  }
  RationalSampler rs(cfg.seed);
  const int pts = cfg.points > 0 ? cfg.points : 5;
  NuSpec shifted = a_k_shift(nu, 1);
  for (int p = 0; p < pts; ++p) {
    Rational y = rs.next(9, 9);
    while (abs_r(y) >= 2) y /= 3;
    CertifiedReal a = phi_nu_one(shifted, y, qp, 1e-20);
    CertifiedReal b = CertifiedReal::exact(y) * phi_nu_one(nu, y, qp, 1e-20);
    Float gap = CertifiedReal::gap(a, b);
    rep.record(gap <= 0, "shift covariance at x=" + to_string(y),
               boost::multiprecision::abs(a.value() - b.value()).convert_to<double>());
  }
  return rep;
}

SuiteReport check_qseries(const VerifyConfig& cfg) {
  SuiteReport rep{"qseries"};
  rep.seed = cfg.seed;
  RationalSampler rs(cfg.seed);
  const int pts = cfg.points > 0 ? cfg.points : 50;
  for (const Rational& q : test_qs()) {
    QParams qp(q, 1);
    // q-binomial partial sums against the product ratio
    for (int p = 0; p < 10; ++p) {
      Rational a = rs.next(9, 9), z = rs.next(9, 9);
      while (abs_r(z) >= Rational(3, 4)) z /= 2;
      Rational part = q_binomial_partial(a, z, 200, qp);
      CertifiedReal ratio = qpoch_infinite(a * z, qp, 1e-30) / qpoch_infinite(z, qp, 1e-30);
      double gap = boost::multiprecision::abs(CertifiedReal::to_float(part) - ratio.value()).convert_to<double>();
      rep.record(gap < 1e-12, "q-binomial partial sum a=" + to_string(a) + " z=" + to_string(z), gap);
    }
    // finite identity
    for (long M = 0; M <= 6; ++M)
      for (int p = 0; p < 3; ++p) {
        Rational z = rs.next(9, 9);
        Rational lhs = finite_qbinomial_sum(M, z, qp), rhs = qpoch_finite_inv(z, M, qp);
        rep.record(lhs == rhs, "finite q-binomial M=" + std::to_string(M), exact_gap(lhs, rhs));
        Rational term = q_binomial_partial(qp.qpow(-M), z, M + 1, qp), tr = qpoch_finite_inv(z / q, M, qp);
        rep.record(term == tr, "terminating series M=" + std::to_string(M), exact_gap(term, tr));
      }
  }
  // doubling the truncation depth stays inside the certified bound
  QParams qp(Rational(1) / 2, 1);
  for (int p = 0; p < pts; ++p) {
    Rational z = rs.next(9, 4);
    long K = qpoch_truncation_depth(z, qp, 1e-12);
    CertifiedReal a = qpoch_infinite_at_depth(z, qp, K), b = qpoch_infinite_at_depth(z, qp, 2 * K);
    Float shift = boost::multiprecision::abs(a.value() - b.value());
    rep.record(shift <= a.error_bound(), "depth doubling z=" + to_string(z), shift.convert_to<double>());
  }
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n{"residue", "multiplicative", "jacobitrudi", "links", "phi",
                                          "example44", "appendixB", "qseries", "all"};
  return n;
}

SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg) {
  SuiteReport rep{name};
  rep.seed = cfg.seed;
  auto add = [&](const SuiteReport& r) { rep.merge(r); };
  if (name == "residue") {
    add(check_residue_grid(cfg));
    add(check_zero_signature(cfg));
  } else if (name == "multiplicative") {
    add(check_multiplicative(cfg));
    add(check_iterated(cfg));
    add(check_schur(cfg));
  } else if (name == "jacobitrudi") {
    add(check_jacobi_trudi(cfg));
  } else if (name == "links") {
    add(check_links(cfg));
    add(check_coherency(cfg));
    add(check_mass_bound(cfg));
  } else if (name == "phi") {
    add(check_phi(cfg));
  } else if (name == "example44") {
    add(check_d_basis(cfg));
  } else if (name == "appendixB") {
    add(check_row_factor_identities(cfg));
  } else if (name == "qseries") {
    add(check_qseries(cfg));
  } else if (name == "all") {
    for (const std::string& s : suite_names())
      if (s != "all") add(run_suite(s, cfg));
  } else {
    throw ParseError("unknown suite '" + name + "'");
  }
  return rep;
}

}  // namespace macb
