#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace macb {

using Rational = mpq_class;
using Integer = mpz_class;

// Violated precondition (bad length, non-interlacing pair, negative n, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A denominator vanished at the requested point.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

// Something that cannot happen if the mathematics is right.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Malformed user input (CLI strings).
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);

// b^e for any integer e; b = 0 with e < 0 raises PoleError.
Rational rpow(const Rational& b, long e);

Rational binomial(long n, long k);  // 0 unless 0 <= k <= n
long binom_int(long n, long k);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

Rational abs_r(const Rational& r);

}  // namespace macb
