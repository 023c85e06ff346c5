#include "macb/laurent.hpp"

#include <algorithm>
#include <numeric>

namespace macb {

LaurentPoly LaurentPoly::constant(int arity, const Rational& c) {
  LaurentPoly p(arity);
  p.add_term(Exponent(static_cast<size_t>(arity), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Rational& c) {
  LaurentPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int arity, int i) {
  Exponent e(static_cast<size_t>(arity), 0);
  e[static_cast<size_t>(i)] = 1;
  return monomial(e);
}

Rational LaurentPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != arity_) throw DomainError("LaurentPoly: exponent arity mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.arity_ != arity_) throw DomainError("LaurentPoly: arity mismatch in +");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.arity_ != arity_) throw DomainError("LaurentPoly: arity mismatch in -");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.arity_ != b.arity_) throw DomainError("LaurentPoly: arity mismatch in *");
  LaurentPoly r(a.arity_);
  Exponent e(static_cast<size_t>(a.arity_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Rational LaurentPoly::evaluate(const std::vector<Rational>& xs) const {
  if (static_cast<int>(xs.size()) != arity_) throw DomainError("LaurentPoly::evaluate: wrong number of points");
  // cache powers per variable
  std::vector<std::map<int, Rational>> pw(xs.size());
  auto power = [&](size_t i, int k) -> const Rational& {
    auto it = pw[i].find(k);
    if (it != pw[i].end()) return it->second;
    return pw[i].emplace(k, rpow(xs[i], k)).first->second;
  };
  Rational s(0);
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) m *= power(i, e[i]);
    s += m;
  }
  return s;
}

LaurentPoly LaurentPoly::scale_vars(const std::vector<Rational>& cs) const {
  if (static_cast<int>(cs.size()) != arity_) throw DomainError("scale_vars: arity mismatch");
  LaurentPoly r(arity_);
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) m *= rpow(cs[i], e[i]);
    r.add_term(e, m);
  }
  return r;
}

LaurentPoly LaurentPoly::shift(const Exponent& s) const {
  if (static_cast<int>(s.size()) != arity_) throw DomainError("shift: arity mismatch");
  LaurentPoly r(arity_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (size_t i = 0; i < f.size(); ++i) f[i] += s[i];
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

LaurentPoly LaurentPoly::permute(const std::vector<int>& perm) const {
  LaurentPoly r(arity_);
  for (const auto& [e, c] : terms_) {
    Exponent f(e.size());
    for (size_t i = 0; i < f.size(); ++i) f[i] = e[static_cast<size_t>(perm[i])];
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

LaurentPoly LaurentPoly::swap_vars(int i, int j) const {
  std::vector<int> perm(static_cast<size_t>(arity_));
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
  return permute(perm);
}

bool LaurentPoly::is_symmetric() const {
  for (int i = 0; i + 1 < arity_; ++i)
    if (!(swap_vars(i, i + 1) == *this)) return false;
  return true;
}

bool LaurentPoly::is_antisymmetric() const {
  for (int i = 0; i + 1 < arity_; ++i) {
    LaurentPoly s = swap_vars(i, i + 1);
    s += *this;
    if (!s.is_zero()) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::embed(int new_arity, int offset) const {
  LaurentPoly r(new_arity);
  for (const auto& [e, c] : terms_) {
    Exponent f(static_cast<size_t>(new_arity), 0);
    for (size_t i = 0; i < e.size(); ++i) f[i + static_cast<size_t>(offset)] = e[i];
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

Exponent LaurentPoly::min_exponents() const {
  Exponent m(static_cast<size_t>(arity_), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (size_t i = 0; i < e.size(); ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

long LaurentPoly::total_degree_min() const {
  long best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    long d = std::accumulate(e.begin(), e.end(), 0L);
    best = first ? d : std::min(best, d);
    first = false;
  }
  return best;
}

LaurentPoly divide_by_difference(const LaurentPoly& f, int i, int j) {
  // Work on the variable x_i with all other exponents grouped: f = sum_k c_k(rest) x_i^k.
  // Division by (x_i - x_j) done by synthetic division from the top x_i-degree down.
  int n = f.arity();
  LaurentPoly rem = f, quot(n);
  auto top = [&](const LaurentPoly& p) {
    // term with the largest x_i exponent (ties broken by map order)
    const Exponent* best = nullptr;
    for (const auto& [e, c] : p.terms())
      if (!best || e[static_cast<size_t>(i)] > (*best)[static_cast<size_t>(i)]) best = &e;
    return best;
  };
  Exponent lo = f.min_exponents();
  while (!rem.is_zero()) {
    const Exponent* e = top(rem);
    Exponent ex = *e;
    Rational c = rem.coeff(ex);
    // a quotient term below the lowest x_i exponent of f means a remainder
    if (ex[static_cast<size_t>(i)] <= lo[static_cast<size_t>(i)])
      throw InternalError("divide_by_difference: nonzero remainder");
    Exponent qe = ex;
    qe[static_cast<size_t>(i)] -= 1;
    quot.add_term(qe, c);
    // rem -= c x^qe (x_i - x_j)
    Exponent a = qe, b = qe;
    a[static_cast<size_t>(i)] += 1;
    b[static_cast<size_t>(j)] += 1;
    rem.add_term(a, -c);
    rem.add_term(b, c);
  }
  return quot;
}

}  // namespace macb
