#include "macb/gtcombin.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace macb {

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("not an integer: '" + tok + "'");
    }
    while (pos < tok.size() && tok[pos] == ' ') ++pos;
    if (pos != tok.size()) throw ParseError("not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

Signature::Signature(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] > parts_[i - 1]) throw DomainError("signature not weakly decreasing: " + join(parts_));
}

Signature Signature::parse(const std::string& s) {
  std::vector<int> v = parse_int_list(s);
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) throw ParseError("signature not weakly decreasing: " + s);
  return Signature(std::move(v));
}

long Signature::size() const {
  long s = 0;
  for (int p : parts_) s += p;
  return s;
}

bool Signature::is_positive() const { return parts_.empty() || parts_.back() >= 0; }

int Signature::min_part() const { return parts_.empty() ? 0 : parts_.back(); }

std::string Signature::str() const { return join(parts_); }

NuSpec::NuSpec(std::vector<int> prefix) : prefix_(std::move(prefix)) {
  if (prefix_.empty()) throw DomainError("NuSpec prefix must be nonempty");
  for (size_t i = 1; i < prefix_.size(); ++i)
    if (prefix_[i] < prefix_[i - 1]) throw DomainError("NuSpec prefix not weakly increasing: " + join(prefix_));
}

NuSpec NuSpec::parse(const std::string& s) {
  std::string body = s, tail = "const";
  auto semi = s.find(';');
  if (semi != std::string::npos) {
    body = s.substr(0, semi);
    tail = s.substr(semi + 1);
    if (tail.rfind("tail=", 0) != 0) throw ParseError("bad NuSpec tail: " + s);
    tail = tail.substr(5);
  }
  if (body.rfind("prefix=", 0) == 0) body = body.substr(7);
  if (tail != "const") throw ParseError("only tail=const is supported: " + s);
  std::vector<int> v = parse_int_list(body);
  if (v.empty()) throw ParseError("empty NuSpec prefix");
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] < v[i - 1]) throw ParseError("NuSpec prefix not weakly increasing: " + s);
  return NuSpec(std::move(v));
}

int NuSpec::at(int i) const {
  if (i < 1) throw DomainError("NuSpec index must be >= 1");
  return i <= prefix_length() ? prefix_[static_cast<size_t>(i - 1)] : prefix_.back();
}

std::string NuSpec::str() const { return "prefix=" + join(prefix_) + ";tail=const"; }

bool interlaces(const Signature& mu, const Signature& lam) {
  int N = lam.length();
  if (mu.length() != N - 1) return false;
  for (int i = 0; i < N - 1; ++i)
    if (!(lam[i + 1] <= mu[i] && mu[i] <= lam[i])) return false;
  return true;
}

std::vector<Signature> interlacings_below(const Signature& lam) {
  int N = lam.length();
  if (N < 1) throw DomainError("interlacings_below: empty signature");
  std::vector<Signature> out;
  std::vector<int> cur(static_cast<size_t>(N - 1));
  std::function<void(int)> rec = [&](int i) {
    if (i == N - 1) {
      out.emplace_back(cur);
      return;
    }
    for (int v = lam[i + 1]; v <= lam[i]; ++v) {
      cur[static_cast<size_t>(i)] = v;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

bool dominance_leq(const Signature& mu, const Signature& lam) {
  if (mu.length() != lam.length()) throw DomainError("dominance_leq: length mismatch");
  long a = 0, b = 0;
  for (int i = 0; i < mu.length(); ++i) {
    a += mu[i];
    b += lam[i];
    if (a > b) return false;
  }
  return a == b;
}

std::vector<int> conjugate(const Signature& lam) {
  if (!lam.is_positive()) throw DomainError("conjugate: needs a positive signature");
  std::vector<int> c;
  int top = lam.length() ? lam[0] : 0;
  for (int j = 1; j <= top; ++j) {
    int cnt = 0;
    for (int p : lam.parts())
      if (p >= j) ++cnt;
    c.push_back(cnt);
  }
  return c;
}

DiagramStats diagram_stats(const Signature& lam, int i, int j) {
  if (!lam.is_positive()) throw DomainError("diagram_stats: needs a positive signature");
  if (i < 1 || i > lam.length() || j < 1 || j > lam[i - 1])
    throw DomainError("diagram_stats: cell (" + std::to_string(i) + "," + std::to_string(j) + ") outside diagram");
  std::vector<int> c = conjugate(lam);
  return {lam[i - 1] - j, j - 1, c[static_cast<size_t>(j - 1)] - i, i - 1};
}

long n_of(const Signature& lam) {
  long s = 0;
  for (int i = 1; i < lam.length(); ++i) s += static_cast<long>(i) * lam[i];
  return s;
}

Signature a_k_shift(const Signature& lam, int k) {
  std::vector<int> p = lam.parts();
  for (int& x : p) x += k;
  return Signature(std::move(p));
}

NuSpec a_k_shift(const NuSpec& nu, int k) {
  std::vector<int> p = nu.prefix();
  for (int& x : p) x += k;
  return NuSpec(std::move(p));
}

Signature stabilizing_signature(const NuSpec& nu, int N) {
  if (N < 1) throw DomainError("stabilizing_signature: N must be positive");
  std::vector<int> p(static_cast<size_t>(N));
  for (int i = 1; i <= N; ++i) p[static_cast<size_t>(N - i)] = nu.at(i);
  return Signature(std::move(p));
}

std::vector<long> phi_support_exponents(const NuSpec& nu, const QParams& qp, int R) {
  if (R < 1) throw DomainError("phi_support_exponents: R must be >= 1");
  std::vector<long> v;
  for (int r = 1; r <= R; ++r)
    for (int s = 0; s < qp.theta(); ++s) v.push_back(static_cast<long>(nu.at(r)) + qp.theta() * (r - 1) + s);
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw InternalError("phi_support_exponents: duplicate pole");
  return v;
}

std::vector<Signature> signatures_in_box(int N, int lo, int hi) {
  std::vector<Signature> out;
  std::vector<int> cur(static_cast<size_t>(N));
  std::function<void(int, int)> rec = [&](int i, int upper) {
    if (i == N) {
      out.emplace_back(cur);
      return;
    }
    for (int v = lo; v <= upper; ++v) {
      cur[static_cast<size_t>(i)] = v;
      rec(i + 1, v);
    }
  };
  rec(0, hi);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Signature> partitions_up_to(int N, int max_size) {
  std::vector<Signature> out;
  for (const Signature& s : signatures_in_box(N, 0, max_size))
    if (s.size() <= max_size) out.push_back(s);
  return out;
}

}  // namespace macb
