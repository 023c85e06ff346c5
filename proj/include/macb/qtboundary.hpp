#pragma once

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "macb/gtcombin.hpp"
#include "macb/laurent.hpp"
#include "macb/qkernel.hpp"

namespace macb {

// Finitely supported measure on GT_m with exact masses.
class SparseMeasure {
 public:
  explicit SparseMeasure(int level = 0) : level_(level) {}
  static SparseMeasure delta(const Signature& lam);

  int level() const { return level_; }
  const std::map<Signature, Rational>& masses() const { return masses_; }
  void add(const Signature& lam, const Rational& w);
  Rational mass(const Signature& lam) const;
  Rational total() const;
  bool is_nonnegative() const;
  size_t support_size() const { return masses_.size(); }
  friend bool operator==(const SparseMeasure& a, const SparseMeasure& b) {
    return a.level_ == b.level_ && a.masses_ == b.masses_;
  }

 private:
  int level_;
  std::map<Signature, Rational> masses_;
};

// phi^(0) < phi^(1) < ... < phi^(n), phi^(0) the empty signature.
class FinitePath {
 public:
  explicit FinitePath(std::vector<Signature> levels);
  int length() const { return static_cast<int>(levels_.size()) - 1; }
  const Signature& at(int k) const { return levels_[static_cast<size_t>(k)]; }
  const Signature& top() const { return levels_.back(); }
  FinitePath extended(const Signature& next) const;

 private:
  std::vector<Signature> levels_;
};

// Lambda^{N+1}_N(lam, mu); zero unless mu interlaces lam.
Rational link_one_step(const Signature& lam, const Signature& mu, const QParams& qp);

// Stochastic kernel GT_from -> GT_to given by its rows.
class Kernel {
 public:
  using RowFn = std::function<SparseMeasure(const Signature&)>;
  Kernel(int from, int to, RowFn row);
  int from() const { return from_; }
  int to() const { return to_; }
  SparseMeasure row(const Signature& lam) const;
  Rational operator()(const Signature& lam, const Signature& mu) const { return row(lam).mass(mu); }
  SparseMeasure apply(const SparseMeasure& m) const;

 private:
  int from_, to_;
  std::shared_ptr<RowFn> row_;
};

// a then b (a.to() == b.from()); rows are combined exactly
Kernel compose(const Kernel& a, const Kernel& b);
Kernel link_kernel(int N, const QParams& qp);              // Lambda^{N+1}_N
Kernel link_compose(int N, int m, const QParams& qp);      // Lambda^N_m, N > m >= 0
SparseMeasure step_down(const SparseMeasure& m, const QParams& qp);
SparseMeasure pushforward_delta(const Signature& lam, int m, const QParams& qp);

// sum_lam M(lam) P_lam(x_1, x_2 t, ..., x_m t^{m-1}) / P_lam(1, ..., t^{m-1})
Rational generating_function_eval(const SparseMeasure& M, const std::vector<Rational>& xs, const QParams& qp);
// Fourier coefficients at dominant exponents, from the monomial expansion
std::map<Signature, Rational> fourier_coefficients(const SparseMeasure& M, const QParams& qp);
// same coefficients read off the expanded twisted generating polynomial
std::map<Signature, Rational> fourier_coefficients_expanded(const SparseMeasure& M, const QParams& qp);

// M(S_phi) for a top measure at level phi.length(), product form
Rational path_probability(const SparseMeasure& top, const FinitePath& phi, const QParams& qp);
// same value as a product of one-step links
Rational path_probability_links(const SparseMeasure& top, const FinitePath& phi, const QParams& qp);

// One-variable limit function, closed telescoped residue series with a
// certified tail.
CertifiedReal phi_nu_one(const NuSpec& nu, const Rational& x, const QParams& qp, double eps);
// Phi(y) (y q; q)_inf, and its eps-derivative companions
// sum_a c_a binom(a, j) y^a (j = 0 gives the plain product).
CertifiedReal phi_nu_entire(const NuSpec& nu, const Rational& y, int j, const QParams& qp, double eps);
// Direct row-by-row residue sum truncated at R rows and I factors (oracle).
CertifiedReal::Float phi_nu_rowsum(const NuSpec& nu, const Rational& x, const QParams& qp, int R, int I);

CertifiedReal phi_nu_multi(const NuSpec& nu, const std::vector<Rational>& xs, const QParams& qp, double eps);

SparseMeasure boundary_measure_approx(const NuSpec& nu, int m, int N, const QParams& qp);
// ((t;t)_inf)^{theta m}
CertifiedReal boundary_mass_lower_bound(int m, const QParams& qp, double eps);
// nu_m >= ... >= nu_1 as a level-m signature
Signature nu_prefix_signature(const NuSpec& nu, int m);

struct GeneratingCheck {
  bool passed = false;
  Rational lhs;       // exact generating function of the level-N approximation
  CertifiedReal rhs;  // Phi at the twisted point
  double residual = 0;
};
GeneratingCheck verify_generating_relation(const NuSpec& nu, int m, int N, const std::vector<Rational>& xs,
                                           const QParams& qp, double eps);

}  // namespace macb
