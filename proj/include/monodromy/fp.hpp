#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace monodromy {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a % n, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

// Prime field element. Every value carries its modulus so mixed-modulus
// arithmetic throws instead of silently producing garbage. A default
// constructed value acts as "zero of any field" and adopts the modulus of
// the other operand; this keeps std::vector<Fp> resizes harmless.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  static Fp make(long long v, std::uint64_t p) {
    if (p < 2) throw error("Fp: modulus must be >= 2");
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return Fp(static_cast<std::uint64_t>(r), p);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  // mint constants living in the same field as *this
  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return from(1); }
  Fp from(long long v) const {
    if (p_ == 0) throw error("Fp: cannot mint from an unset field element");
    return make(v, p_);
  }

  friend Fp operator+(Fp a, Fp b) {
    std::uint64_t p = join(a, b);
    if (p == 0) return Fp();
    std::uint64_t s = a.v_ + b.v_;
    if (s >= p) s -= p;
    return Fp(s, p);
  }
  friend Fp operator-(Fp a, Fp b) {
    std::uint64_t p = join(a, b);
    if (p == 0) return Fp();
    return Fp(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + p - b.v_, p);
  }
  Fp operator-() const {
    if (p_ == 0) return *this;
    return Fp(v_ == 0 ? 0 : p_ - v_, p_);
  }
  friend Fp operator*(Fp a, Fp b) {
    std::uint64_t p = join(a, b);
    if (p == 0) return Fp();
    return Fp(static_cast<std::uint64_t>((static_cast<unsigned __int128>(a.v_) * b.v_) % p), p);
  }
  Fp pow(std::uint64_t e) const {
    if (p_ == 0) throw error("Fp: pow on unset element");
    Fp r = one(), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }
  Fp inv() const {
    if (p_ == 0 || v_ == 0) throw error("Fp: inverse of zero");
    return pow(p_ - 2);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }

  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  friend bool operator==(Fp a, Fp b) {
    if (a.p_ == 0 || b.p_ == 0) return a.v_ == 0 && b.v_ == 0;
    return join(a, b) && a.v_ == b.v_;
  }
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }

  // signed representative in (-p/2, p/2], handy for recognizing small integers
  long long lifted() const {
    if (p_ == 0) return 0;
    return v_ * 2 > p_ ? static_cast<long long>(v_) - static_cast<long long>(p_)
                       : static_cast<long long>(v_);
  }

  std::string str() const { return std::to_string(v_); }

 private:
  Fp(std::uint64_t v, std::uint64_t p) : v_(v), p_(p) {}
  static std::uint64_t join(const Fp& a, const Fp& b) {
    if (a.p_ == 0) return b.p_;
    if (b.p_ == 0) return a.p_;
    if (a.p_ != b.p_) throw error("Fp: mixed moduli");
    return a.p_;
  }
  std::uint64_t v_, p_;
};

inline std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// smallest generator of the cyclic group F_l^x
inline Fp primitive_root(std::uint64_t l) {
  if (!is_prime_u64(l)) throw error("primitive_root: modulus not prime");
  auto qs = prime_factors_u64(l - 1);
  for (std::uint64_t g = 2; g < l; ++g) {
    Fp x = Fp::make(static_cast<long long>(g), l);
    bool ok = true;
    for (auto q : qs) {
      if (x.pow((l - 1) / q) == x.one()) { ok = false; break; }
    }
    if (ok) return x;
  }
  throw error("primitive_root: none found");
}

// element of exact multiplicative order k (requires k | l-1)
inline Fp root_of_unity(std::uint64_t l, std::uint64_t k) {
  if ((l - 1) % k != 0)
    throw error("root_of_unity: order " + std::to_string(k) + " needs l = 1 mod " + std::to_string(k));
  return primitive_root(l).pow((l - 1) / k);
}

inline std::uint64_t multiplicative_order(Fp x) {
  if (x.is_zero()) throw error("multiplicative_order: zero");
  std::uint64_t n = x.modulus() - 1, ord = n;
  for (auto q : prime_factors_u64(n)) {
    while (ord % q == 0 && x.pow(ord / q) == x.one()) ord /= q;
  }
  return ord;
}

}  // namespace monodromy
