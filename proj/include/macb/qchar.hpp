#pragma once

#include <array>
#include <map>
#include <vector>

#include "macb/gtcombin.hpp"
#include "macb/jactrudi.hpp"
#include "macb/laurent.hpp"
#include "macb/qkernel.hpp"

namespace macb {

// P_lambda(x_1..x_m, 1, t, ..., t^{N-m-1}) / P_lambda(1, t, ..., t^{N-1})
Rational character(const Signature& lam, int N, const std::vector<Rational>& xs, const QParams& qp);

// Principal-specialization conventions in use, all reduced to
// character() by homogeneity:
//   Unitary     (x_1..x_m, 1, t, ..., t^{N-m-1})
//   Contour     (x, t, ..., t^{N-1}), m = 1 only
//   Prelimit    (x_1..x_m, t^{-m}, ..., t^{1-N})
//   Generating  (1, t, ..., t^{N-m-1}, x_1 t^{N-m}, ..., x_m t^{N-1})
enum class CharConvention { Unitary, Contour, Prelimit, Generating };
Rational character_in(CharConvention conv, const Signature& lam, int N, const std::vector<Rational>& xs,
                      const QParams& qp);

// Contour-integral side evaluated as a finite residue sum over the theta N
// integer poles lambda_i + theta (N - i) + j.
Rational residue_character(const Signature& lam, int N, const Rational& x, const QParams& qp);
std::vector<long> residue_poles(const Signature& lam, int N, const QParams& qp);

// one-variable character x -> character(lam, N, [x]) as a Laurent polynomial
LaurentPoly character_one_var(const Signature& lam, int N, const QParams& qp);

// Sum_k c_k T_{q,x_1}^{e_k1} ... T_{q,x_m}^{e_km}
struct QShiftTerm {
  Rational coeff;
  Exponent shifts;
};
class QShiftExpr {
 public:
  explicit QShiftExpr(int arity = 0) : arity_(arity) {}
  int arity() const { return arity_; }
  void add(const Rational& c, const Exponent& shifts);
  const std::vector<QShiftTerm>& terms() const { return terms_; }
  // coefficients in the D-basis, T^e = sum_j binom(e,j) (q-1)^j D^j
  std::map<Exponent, Rational> to_degree_basis(const QParams& qp) const;

 private:
  int arity_;
  std::vector<QShiftTerm> terms_;
};

LaurentPoly qshift_apply(const QShiftExpr& expr, const LaurentPoly& f, const QParams& qp);
// T_{q,x_i}: x_i -> q x_i
LaurentPoly qshift_var(int i, const LaurentPoly& f, const QParams& qp);
// D_{q,x_i} = (T_{q,x_i} - 1)/(q - 1); x^m -> [m]_q x^m
LaurentPoly qdeg_apply(int i, const LaurentPoly& f, const QParams& qp);
// D^{e_1}_1 ... D^{e_m}_m applied to f
LaurentPoly qdeg_power_apply(const Exponent& e, const LaurentPoly& f, const QParams& qp);

// Multivariate formula: sum over M_theta^{(m)} of shifted one-variable brackets.
Rational multiplicative_character(const Signature& lam, int N, int m, const std::vector<Rational>& xs,
                                  const QParams& qp);

// Two-variable form with theta alternating (D_2 - D_1) / (x_1 - x_2) steps.
struct IteratedResult {
  Rational value;
  int steps = 0;  // division steps, each with zero remainder
};
IteratedResult two_var_iterated(const Signature& lam, int N, const std::vector<Rational>& xs, const QParams& qp);

// det[x_i^{lambda_j + N - j}] / prod_{i<j}(x_i - x_j)
Rational schur_bialternant(const Signature& lam, const std::vector<Rational>& xs);
LaurentPoly schur_poly(const Signature& lam, int N);
// theta = 1 operator formula with one-variable Schur values from the bialternant
Rational schur_character(const Signature& lam, int N, int m, const std::vector<Rational>& xs, const QParams& qp);
// prod_{i<j}(T_j - T_i) expanded in T-monomials, and the sign sum over M_1^{(m)}
std::map<Exponent, long> vandermonde_shift_expansion(int m);
std::map<Exponent, long> signed_matrix_shift_expansion(int m);

// theta = 2, m = 3 D-basis coefficient f_{i1,i2,i3}; requires i1 + i2 + i3 <= 5
Rational d_basis_coefficient(const std::array<int, 3>& i, const std::vector<Rational>& xs, const QParams& qp);
// closed forms for f_{4,1,0} and f_{2,1,1}
Rational d_basis_closed_410(const std::vector<Rational>& xs, const QParams& qp);
Rational d_basis_closed_211(const std::vector<Rational>& xs, const QParams& qp);
// Applies the theta = 2, m = 3 operator to f once through T-shifts and once
// as top part plus D-basis remainder; returns both values at xs.
std::pair<Rational, Rational> d_basis_top_consistency(const LaurentPoly& f, const std::vector<Rational>& xs,
                                                        const QParams& qp);

}  // namespace macb
