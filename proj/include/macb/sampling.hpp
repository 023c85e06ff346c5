#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "macb/qkernel.hpp"

namespace macb {

// Seeded source of small rationals. Uses raw mt19937_64 output with modular
// reduction so the stream is the same on every platform.
class RationalSampler {
 public:
  explicit RationalSampler(uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) {  // inclusive
    auto span = static_cast<uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
  }

  // nonzero p/d with |p| <= max_num, 1 <= d <= max_den
  Rational next(long max_num = 9, long max_den = 9) {
    long p = 0;
    while (p == 0) p = uniform(-max_num, max_num);
    long d = uniform(1, max_den);
    return Rational(p) / Rational(d);
  }

  // k points passing the admissibility test (rejection sampling)
  std::vector<Rational> points(int k, const std::function<bool(const std::vector<Rational>&)>& ok, long max_num = 9,
                               long max_den = 9) {
    for (int tries = 0; tries < 100000; ++tries) {
      std::vector<Rational> v;
      for (int i = 0; i < k; ++i) v.push_back(next(max_num, max_den));
      if (ok(v)) return v;
    }
    throw DomainError("RationalSampler: no admissible point found");
  }

 private:
  std::mt19937_64 rng_;
};

// x_i nonzero, x_i != +-q^k and x_i != q^k x_j for |k| <= K; keeps sampled
// points away from every pole of the operator formulas.
inline bool q_generic(const std::vector<Rational>& xs, const QParams& qp, long K = 48) {
  for (size_t i = 0; i < xs.size(); ++i) {
    if (sgn(xs[i]) == 0) return false;
    for (long k = -K; k <= K; ++k) {
      Rational qk = qp.qpow(k);
      if (xs[i] == qk || xs[i] == -qk) return false;
      for (size_t j = 0; j < xs.size(); ++j)
        if (j != i && xs[i] == qk * xs[j]) return false;
    }
  }
  return true;
}

}  // namespace macb
