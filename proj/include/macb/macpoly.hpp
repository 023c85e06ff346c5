#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "macb/gtcombin.hpp"
#include "macb/laurent.hpp"
#include "macb/qkernel.hpp"

namespace macb {

// Memo for polynomials and branching coefficients. Lock-protected; a lookup
// never changes a result, so concurrent duplicate work is harmless.
class BranchingCache {
 public:
  static BranchingCache& global();

  bool find_poly(const std::string& key, LaurentPoly& out) const;
  void store_poly(const std::string& key, const LaurentPoly& p);
  bool find_scalar(const std::string& key, Rational& out) const;
  void store_scalar(const std::string& key, const Rational& r);
  void clear();
  size_t poly_count() const;

 private:
  mutable std::mutex mu_;
  std::map<std::string, LaurentPoly> polys_;
  std::map<std::string, Rational> scalars_;
};

// (q^a;q)_inf / (q^b;q)_inf for integer exponents, reduced to a finite product.
Rational qpow_poch_ratio(long a, long b, const QParams& qp);

LaurentPoly monomial_symmetric(const Signature& lam, int N);
Rational psi_branching(const Signature& lam, const Signature& mu, const QParams& qp);
LaurentPoly macdonald_poly(const Signature& lam, int N, const QParams& qp);
// P_lambda at a numeric point by the branching recursion (no polynomial built).
Rational macdonald_eval(const Signature& lam, const std::vector<Rational>& ys, const QParams& qp);
Rational evaluation_principal(const Signature& lam, int N, const QParams& qp);
// second (arm/leg) form of the evaluation identity; positive signatures only
Rational evaluation_principal_cells(const Signature& lam, int N, const QParams& qp);
Rational b_lambda(const Signature& lam, const QParams& qp);
LaurentPoly dual_Q(const Signature& lam, int N, const QParams& qp);
// Q_lambda(t^{N-1},...,1) from the arm/leg product with b_lambda folded in.
Rational dual_principal_cells(const Signature& lam, int N, const QParams& qp);
LaurentPoly g_poly(long n, int N, const QParams& qp);
std::map<Signature, Rational> monomial_expansion(const Signature& lam, int N, const QParams& qp);
bool check_index_argument_symmetry(const Signature& lam, const Signature& mu, int N, const QParams& qp);

// (1, t, ..., t^{N-1})
std::vector<Rational> principal_point(int N, const QParams& qp);

}  // namespace macb
