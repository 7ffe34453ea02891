#pragma once

#include <string>
#include <vector>

namespace casselman {

/// Dense integer polynomial in q.  Trailing zeros are trimmed; the zero
/// polynomial has empty coefficient list and degree() = -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPolynomial constant(long long v) {
    return v == 0 ? IntPolynomial() : IntPolynomial({v});
  }

  const std::vector<long long>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  long long coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0;
  }

  void add_shifted(const IntPolynomial& o, int shift, long long scale = 1) {
    if (o.is_zero() || scale == 0) return;
    if (static_cast<int>(c_.size()) < o.degree() + 1 + shift) c_.resize(o.degree() + 1 + shift, 0);
    for (int i = 0; i <= o.degree(); ++i) c_[i + shift] += scale * o.c_[i];
    trim();
  }

  IntPolynomial operator+(const IntPolynomial& o) const {
    IntPolynomial r = *this;
    r.add_shifted(o, 0);
    return r;
  }
  IntPolynomial operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<long long> out(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(out));
  }

  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      if (c_[k] == 0) continue;
      if (!s.empty()) s += c_[k] > 0 ? " + " : " - ";
      else if (c_[k] < 0) s += "-";
      long long a = c_[k] > 0 ? c_[k] : -c_[k];
      if (a != 1 || k == 0) s += std::to_string(a);
      if (k >= 1) {
        if (a != 1) s += "*";
        s += "q";
        if (k > 1) s += "^" + std::to_string(k);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<long long> c_;
};

}  // namespace casselman
