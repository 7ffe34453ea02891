#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "casselman/rng.hpp"

namespace casselman {

/*
  Element of the prime field F_p for a word-size modulus, stored as the
  canonical representative in [0, p).  The modulus travels with the value so
  that several fields can coexist in one sweep; mixing moduli in one
  operation throws.  Requires 1 < p < 2^63 so a + b never wraps.
*/
class Fp {
 public:
  Fp(uint64_t value, uint64_t modulus) : p_(modulus) {
    if (modulus < 2 || modulus >= (1ULL << 63))
      throw std::invalid_argument("Fp: modulus out of range");
    v_ = value % modulus;
  }

  static Fp zero(uint64_t p) { return Fp(0, p); }
  static Fp one(uint64_t p) { return Fp(1, p); }
  static Fp from_int(long long n, uint64_t p) {
    if (n >= 0) return Fp(static_cast<uint64_t>(n), p);
    uint64_t r = static_cast<uint64_t>(-(n + 1)) % p;
    return Fp(p - 1 - r, p);
  }

  uint64_t value() const { return v_; }
  uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp operator+(const Fp& o) const {
    check(o);
    uint64_t s = v_ + o.v_;
    if (s >= p_) s -= p_;
    return raw(s, p_);
  }
  Fp operator-(const Fp& o) const {
    check(o);
    return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
  }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp operator*(const Fp& o) const {
    check(o);
    return raw(mulmod_u64(v_, o.v_, p_), p_);
  }
  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: division by zero");
    // extended Euclid
    int64_t t = 0, nt = 1;
    uint64_t r = p_, nr = v_;
    while (nr != 0) {
      uint64_t q = r / nr;
      int64_t tmp = t - static_cast<int64_t>(q) * nt;
      t = nt; nt = tmp;
      uint64_t tr = r - q * nr;
      r = nr; nr = tr;
    }
    if (r != 1) throw std::domain_error("Fp: value not invertible (composite modulus?)");
    return raw(t < 0 ? static_cast<uint64_t>(t + static_cast<int64_t>(p_)) : static_cast<uint64_t>(t), p_);
  }
  Fp operator/(const Fp& o) const { return *this * o.inverse(); }
  Fp pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    return raw(powmod_u64(v_, static_cast<uint64_t>(e), p_), p_);
  }

  bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }

 private:
  static Fp raw(uint64_t v, uint64_t p) {
    Fp x(0, p);
    x.v_ = v;
    return x;
  }
  void check(const Fp& o) const {
    if (p_ != o.p_) throw std::invalid_argument("Fp: mixed moduli");
  }

  uint64_t v_;
  uint64_t p_;
};

inline Fp zero_like(const Fp& x) { return Fp::zero(x.modulus()); }
inline Fp one_like(const Fp& x) { return Fp::one(x.modulus()); }
inline Fp int_like(long long n, const Fp& x) { return Fp::from_int(n, x.modulus()); }
inline Fp inverse(const Fp& x) { return x.inverse(); }
inline Fp pow(const Fp& x, long long e) { return x.pow(e); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline bool is_one(const Fp& x) { return x.is_one(); }
inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

}  // namespace casselman
