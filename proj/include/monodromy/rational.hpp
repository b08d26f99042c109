#pragma once

#include <gmpxx.h>

#include <string>

#include "monodromy/fp.hpp"

namespace monodromy {

// Exact rational coefficients with the same minting interface as Fp, so the
// linear algebra and algebra templates work over either field.
class Rat {
 public:
  Rat() : q_(0) {}
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  static Rat make(long long num, long long den = 1) {
    if (den == 0) throw error("Rat: zero denominator");
    // gmpxx has no long long constructor; long is 64-bit on this platform
    Rat r(mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))));
    return r;
  }

  bool is_zero() const { return q_ == 0; }
  Rat zero() const { return Rat(); }
  Rat one() const { return from(1); }
  Rat from(long long v) const { return make(v); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.q_ + b.q_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.q_ - b.q_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.q_ * b.q_); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw error("Rat: division by zero");
    return Rat(a.q_ / b.q_);
  }
  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat pow(std::uint64_t e) const {
    Rat r = one(), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }
  Rat inv() const {
    if (is_zero()) throw error("Rat: inverse of zero");
    return Rat(mpq_class(1) / q_);
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }

  bool is_integer() const { return q_.get_den() == 1; }
  long long num_ll() const { return q_.get_num().get_si(); }
  long long den_ll() const { return q_.get_den().get_si(); }
  const mpq_class& raw() const { return q_; }

  // reduction mod l; throws if l divides the denominator
  Fp mod(std::uint64_t l) const {
    mpz_class num = q_.get_num(), den = q_.get_den(), lz(static_cast<unsigned long>(l));
    mpz_class dr = den % lz;
    if (dr == 0) throw error("Rat: denominator divisible by modulus");
    mpz_class nr = num % lz;
    Fp n = Fp::make(nr.get_si(), l);
    Fp d = Fp::make(dr.get_si(), l);
    return n / d;
  }

  std::string str() const { return q_.get_str(); }

 private:
  mpq_class q_;
};

}  // namespace monodromy
