#pragma once

#include <cstdint>
#include <unordered_map>

#include "casselman/poly.hpp"
#include "casselman/weyl.hpp"

namespace casselman {

/*
  Kazhdan-Lusztig R- and P-polynomials by the standard descent recursions,
  both taken on the right with the smallest right descent of v, so every
  table entry is reproducible.  With s a right descent of v:

    R_{u,v} = R_{us,vs}                    if us < u
            = (q-1) R_{u,vs} + q R_{us,vs} if us > u

    P_{u,v} = q^{1-c} P_{us,vs} + q^c P_{u,vs}
              - sum over {u <= w < vs : ws < w, mu(w,vs) != 0} of
                mu(w,vs) q^{(l(v)-l(w))/2} P_{u,w}
    with c = 1 if us < u, else 0,

  where mu(w,x) is the coefficient of q^{(l(x)-l(w)-1)/2} in P_{w,x}.
  Entries with u not <= v are 0 and P_{u,u} = R_{u,u} = 1.  Everything is
  memoized per (u,v); a full table is just the closure of the memo.
*/
class KLTable {
 public:
  explicit KLTable(const WeylGroup& g) : g_(g) {}

  const WeylGroup& group() const { return g_; }

  const IntPolynomial& r_polynomial(WeylElement u, WeylElement v) {
    uint64_t key = pack(u, v);
    auto it = rmemo_.find(key);
    if (it != rmemo_.end()) return it->second;
    IntPolynomial res;
    if (!g_.bruhat_leq(u, v)) {
      res = IntPolynomial();
    } else if (u == v) {
      res = IntPolynomial::constant(1);
    } else {
      int s = g_.first_right_descent(v);
      WeylElement vs = g_.right_mult_gen(v, s);
      WeylElement us = g_.right_mult_gen(u, s);
      if (g_.length(us) < g_.length(u)) {
        res = r_polynomial(us, vs);
      } else {
        // (q-1) R_{u,vs} + q R_{us,vs}
        IntPolynomial a = r_polynomial(u, vs);
        IntPolynomial b = r_polynomial(us, vs);
        res.add_shifted(a, 1);
        res.add_shifted(a, 0, -1);
        res.add_shifted(b, 1);
      }
    }
    return rmemo_.emplace(key, std::move(res)).first->second;
  }

  const IntPolynomial& kl_polynomial(WeylElement u, WeylElement v) {
    uint64_t key = pack(u, v);
    auto it = pmemo_.find(key);
    if (it != pmemo_.end()) return it->second;
    IntPolynomial res = compute_kl(u, v);
    return pmemo_.emplace(key, std::move(res)).first->second;
  }

  /// mu(u,v): coefficient of q^{(l(v)-l(u)-1)/2} in P_{u,v}, zero if the
  /// length difference is even or u is not strictly below v.
  long long mu_coeff(WeylElement u, WeylElement v) {
    int d = g_.length(v) - g_.length(u);
    if (!g_.bruhat_lt(u, v) || d % 2 == 0) return 0;
    return kl_polynomial(u, v).coeff((d - 1) / 2);
  }

  /// u < v in the Kazhdan-Lusztig precedence sense.
  bool kl_prec(WeylElement u, WeylElement v) { return mu_coeff(u, v) != 0; }

  /// Force every pair; afterwards lookups hit the memo only.
  void compute_all() {
    for (uint32_t v = 0; v < g_.size(); ++v)
      for (uint32_t u = 0; u < g_.size(); ++u)
        if (g_.bruhat_leq(WeylElement{u}, WeylElement{v}))
          kl_polynomial(WeylElement{u}, WeylElement{v});
  }

  /// Memo injection for the cache (entries are trusted as a unit; the cache
  /// layer guards them with a checksum over the canonical element list).
  void seed(WeylElement u, WeylElement v, IntPolynomial p) {
    pmemo_.emplace(pack(u, v), std::move(p));
  }
  size_t computed_pairs() const { return pmemo_.size(); }

 private:
  uint64_t pack(WeylElement u, WeylElement v) const {
    return (static_cast<uint64_t>(u.idx) << 32) | v.idx;
  }

  IntPolynomial compute_kl(WeylElement u, WeylElement v) {
    if (!g_.bruhat_leq(u, v)) return {};
    if (u == v) return IntPolynomial::constant(1);
    int s = g_.first_right_descent(v);
    WeylElement vs = g_.right_mult_gen(v, s);
    WeylElement us = g_.right_mult_gen(u, s);
    int c = g_.length(us) < g_.length(u) ? 1 : 0;
    IntPolynomial res;
    res.add_shifted(kl_polynomial(us, vs), 1 - c);
    res.add_shifted(kl_polynomial(u, vs), c);
    for (uint32_t wi = 0; wi < g_.size(); ++wi) {
      WeylElement w{wi};
      if (!g_.bruhat_leq(u, w) || !g_.bruhat_lt(w, vs)) continue;
      if (!g_.right_descent(w, s)) continue;
      long long m = mu_coeff(w, vs);
      if (m == 0) continue;
      res.add_shifted(kl_polynomial(u, w), (g_.length(v) - g_.length(w)) / 2, -m);
    }
    return res;
  }

  const WeylGroup& g_;
  std::unordered_map<uint64_t, IntPolynomial> rmemo_;
  std::unordered_map<uint64_t, IntPolynomial> pmemo_;
};

}  // namespace casselman
