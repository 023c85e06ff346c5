#include "macb/scalar.hpp"

#include <cctype>

namespace macb {

Rational parse_rational(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational");
  auto valid_int = [](const std::string& p) {
    size_t i = (p.size() > 0 && (p[0] == '-' || p[0] == '+')) ? 1 : 0;
    if (i >= p.size()) return false;
    for (; i < p.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(p[i]))) return false;
    return true;
  };
  auto pos = s.find('/');
  std::string num = s.substr(0, pos);
  std::string den = pos == std::string::npos ? "1" : s.substr(pos + 1);
  if (num.size() > 1 && num[0] == '+') num = num.substr(1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("not a rational: '" + raw + "'");
  Integer n(num), d(den);
  if (d == 0) throw ParseError("zero denominator: '" + raw + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational rpow(const Rational& b, long e) {
  if (e == 0) return Rational(1);
  if (sgn(b) == 0) {
    if (e < 0) throw PoleError("pole: 0 raised to negative power");
    return Rational(0);
  }
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), b.get_num_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), b.get_den_mpz_t(), k);
  Rational r = e > 0 ? Rational(n, d) : Rational(d, n);
  r.canonicalize();
  return r;
}

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

long binom_int(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Rational abs_r(const Rational& r) { return sgn(r) < 0 ? Rational(-r) : r; }

}  // namespace macb
