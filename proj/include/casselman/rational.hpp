#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace casselman {

/// Exact arbitrary-precision rational, the slow-but-transparent scalar
/// backend.  Thin wrapper so the generic code sees the same surface as Fp.
class Rational {
 public:
  using Rep = boost::multiprecision::cpp_rational;

  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(long long num, long long den) : v_(num) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ /= Rep(den);
  }
  explicit Rational(Rep v) : v_(std::move(v)) {}

  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }

  const Rep& rep() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Rational operator+(const Rational& o) const { return Rational(Rep(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(Rep(v_ - o.v_)); }
  Rational operator-() const { return Rational(Rep(-v_)); }
  Rational operator*(const Rational& o) const { return Rational(Rep(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(Rep(v_ / o.v_));
  }
  Rational inverse() const {
    if (v_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(Rep(1 / v_));
  }
  Rational pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Rational r = one(), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }

 private:
  Rep v_;
};

inline Rational zero_like(const Rational&) { return Rational::zero(); }
inline Rational one_like(const Rational&) { return Rational::one(); }
inline Rational int_like(long long n, const Rational&) { return Rational(n); }
inline Rational inverse(const Rational& x) { return x.inverse(); }
inline Rational pow(const Rational& x, long long e) { return x.pow(e); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_one(const Rational& x) { return x.is_one(); }
inline std::string to_string(const Rational& x) { return x.rep().str(); }

}  // namespace casselman
