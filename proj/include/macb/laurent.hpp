#pragma once

#include <map>
#include <vector>

#include "macb/scalar.hpp"

namespace macb {

using Exponent = std::vector<int>;

// Sparse Laurent polynomial in a fixed number of variables, exact rational
// coefficients. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, Rational>;

  explicit LaurentPoly(int arity = 0) : arity_(arity) {}
  static LaurentPoly constant(int arity, const Rational& c);
  static LaurentPoly monomial(const Exponent& e, const Rational& c = Rational(1));
  static LaurentPoly variable(int arity, int i);  // x_{i+1}, 0-based

  int arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  Rational coeff(const Exponent& e) const;

  void add_term(const Exponent& e, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  Rational evaluate(const std::vector<Rational>& xs) const;
  // x_i -> c_i x_i
  LaurentPoly scale_vars(const std::vector<Rational>& cs) const;
  // multiply by x^shift
  LaurentPoly shift(const Exponent& e) const;
  // new variable order: result variable i is old variable perm[i]
  LaurentPoly permute(const std::vector<int>& perm) const;
  LaurentPoly swap_vars(int i, int j) const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;
  // embed into a larger arity, placing this poly's variables at offset
  LaurentPoly embed(int new_arity, int offset) const;
  // minimum exponent per variable (0 for the zero polynomial)
  Exponent min_exponents() const;
  long total_degree_min() const;

 private:
  int arity_;
  Terms terms_;
};

// Exact division of f by (x_i - x_j); throws InternalError on nonzero remainder.
LaurentPoly divide_by_difference(const LaurentPoly& f, int i, int j);

}  // namespace macb
