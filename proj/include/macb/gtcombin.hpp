#pragma once

#include <string>
#include <vector>

#include "macb/qkernel.hpp"

namespace macb {

// Weakly decreasing integer sequence of fixed length; length 0 is the empty
// signature. Trailing zeros count: (1,0) and (1) are different objects.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<int> parts);
  Signature(std::initializer_list<int> parts) : Signature(std::vector<int>(parts)) {}
  static Signature parse(const std::string& s);

  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }  // 0-based
  long size() const;                                                       // |lambda|
  bool is_positive() const;
  int min_part() const;
  std::string str() const;

  friend bool operator==(const Signature& a, const Signature& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
  friend bool operator<(const Signature& a, const Signature& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
};

// Weakly increasing prefix nu_1 <= ... <= nu_L with nu_i = nu_L for i > L.
class NuSpec {
 public:
  NuSpec() : prefix_{0} {}
  explicit NuSpec(std::vector<int> prefix);
  static NuSpec parse(const std::string& s);  // "prefix=0,0,2;tail=const"

  int at(int i) const;  // 1-based nu_i
  int prefix_length() const { return static_cast<int>(prefix_.size()); }
  const std::vector<int>& prefix() const { return prefix_; }
  int tail_value() const { return prefix_.back(); }
  std::string str() const;

  friend bool operator==(const NuSpec& a, const NuSpec& b) { return a.prefix_ == b.prefix_; }

 private:
  std::vector<int> prefix_;
};

struct DiagramStats {
  int arm = 0, arm_colength = 0, leg = 0, leg_colength = 0;
  friend bool operator==(const DiagramStats&, const DiagramStats&) = default;
};

bool interlaces(const Signature& mu, const Signature& lam);  // mu < lam, lengths N-1 and N
std::vector<Signature> interlacings_below(const Signature& lam);
bool dominance_leq(const Signature& mu, const Signature& lam);
std::vector<int> conjugate(const Signature& lam);
DiagramStats diagram_stats(const Signature& lam, int i, int j);  // 1-based cell
long n_of(const Signature& lam);
Signature a_k_shift(const Signature& lam, int k);
NuSpec a_k_shift(const NuSpec& nu, int k);
Signature stabilizing_signature(const NuSpec& nu, int N);
std::vector<long> phi_support_exponents(const NuSpec& nu, const QParams& qp, int R);

// All signatures of length N with parts in [lo, hi], lexicographic.
std::vector<Signature> signatures_in_box(int N, int lo, int hi);
// All partitions (padded to length N) with |lambda| <= max_size.
std::vector<Signature> partitions_up_to(int N, int max_size);

}  // namespace macb
