#pragma once

#include <algorithm>
#include <vector>

#include "macb/scalar.hpp"

namespace macb {

// Truncated Laurent series eps^val * (c_0 + c_1 eps + ... + c_{n-1} eps^{n-1} + O(eps^n))
// over the rationals. Used to evaluate rational expressions at points where
// a factor vanishes in both numerator and denominator: perturb the inputs
// along eps and read off the constant term.
class Series {
 public:
  static constexpr int kDefaultPrecision = 8;

  Series() : Series(Rational(0)) {}
  Series(const Rational& c, int prec = kDefaultPrecision) : val_(0), c_(static_cast<size_t>(prec), Rational(0)) {
    c_[0] = c;
    normalize();
  }
  Series(int v) : Series(Rational(v)) {}  // NOLINT: integer literals
  // a + b eps
  static Series linear(const Rational& a, const Rational& b, int prec = kDefaultPrecision) {
    Series s(a, prec);
    s.val_ = 0;
    s.c_.assign(static_cast<size_t>(prec), Rational(0));
    s.c_[0] = a;
    if (prec > 1) s.c_[1] = b;
    s.normalize();
    return s;
  }

  int valuation() const { return val_; }
  int precision() const { return static_cast<int>(c_.size()); }
  // exact zero to known precision
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return sgn(r) == 0; });
  }
  // coefficient of eps^k, if known
  Rational coeff(int k) const {
    int idx = k - val_;
    if (idx < 0) return Rational(0);
    if (idx >= precision()) throw InternalError("Series: coefficient beyond precision");
    return c_[static_cast<size_t>(idx)];
  }
  // value at eps = 0 (requires nonnegative valuation)
  Rational constant_term() const {
    if (is_zero()) return Rational(0);
    if (val_ < 0) throw PoleError("pole: expression has a genuine pole at the perturbed point");
    return coeff(0);
  }

  friend Series operator+(const Series& a, const Series& b) {
    if (a.is_zero() && a.val_ >= b.val_ + b.precision()) return b;
    if (b.is_zero() && b.val_ >= a.val_ + a.precision()) return a;
    int v = std::min(a.val_, b.val_);
    int top = std::min(a.val_ + a.precision(), b.val_ + b.precision());  // first unknown power
    Series r;
    r.val_ = v;
    r.c_.assign(static_cast<size_t>(std::max(top - v, 1)), Rational(0));
    for (int k = v; k < top; ++k) {
      Rational s(0);
      if (k >= a.val_) s += a.c_[static_cast<size_t>(k - a.val_)];
      if (k >= b.val_) s += b.c_[static_cast<size_t>(k - b.val_)];
      r.c_[static_cast<size_t>(k - v)] = s;
    }
    r.normalize();
    return r;
  }
  Series operator-() const {
    Series r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
  friend Series operator*(const Series& a, const Series& b) {
    Series r;
    int n = std::min(a.precision(), b.precision());
    r.val_ = a.val_ + b.val_;
    r.c_.assign(static_cast<size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; i + j < n; ++j) r.c_[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
    r.normalize();
    return r;
  }
  friend Series operator/(const Series& a, const Series& b) {
    if (b.is_zero()) throw PoleError("pole: division by a vanishing factor");
    if (sgn(b.c_[0]) == 0) throw PoleError("pole: divisor lost all known precision");
    int n = std::min(a.precision(), b.precision());
    // inverse of b's unit part
    std::vector<Rational> inv(static_cast<size_t>(n), Rational(0));
    inv[0] = Rational(1) / b.c_[0];
    for (int k = 1; k < n; ++k) {
      Rational s(0);
      for (int j = 1; j <= k && j < b.precision(); ++j) s += b.c_[static_cast<size_t>(j)] * inv[static_cast<size_t>(k - j)];
      inv[static_cast<size_t>(k)] = -s * inv[0];
    }
    Series ib;
    ib.val_ = -b.val_;
    ib.c_ = std::move(inv);
    return a * ib;
  }
  Series& operator+=(const Series& b) { return *this = *this + b; }
  Series& operator-=(const Series& b) { return *this = *this - b; }
  Series& operator*=(const Series& b) { return *this = *this * b; }
  Series& operator/=(const Series& b) { return *this = *this / b; }

 private:
  // strip leading zeros; precision shrinks accordingly
  void normalize() {
    size_t k = 0;
    while (k < c_.size() && sgn(c_[k]) == 0) ++k;
    if (k == c_.size()) {
      val_ += static_cast<int>(k) - 1;
      c_.assign(1, Rational(0));
      return;
    }
    if (k > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
      val_ += static_cast<int>(k);
    }
  }

  int val_;
  std::vector<Rational> c_;
};

inline bool is_zero(const Series& s) { return s.is_zero(); }

}  // namespace macb
