#pragma once

#include <stdexcept>
#include <vector>

#include "casselman/fp.hpp"
#include "casselman/rational.hpp"
#include "casselman/weyl.hpp"

namespace casselman {

/*
  A spectral point carries the values z^{alpha_i} of a torus element z on the
  simple roots, together with the residue-cardinality symbol q as an ordinary
  field element.  Every formula in the library depends on z only through
  monomials z^alpha for roots alpha, so this is a complete parametrization.

  Generic means z^alpha != 1 for every root alpha and q not in {0, 1}.
*/
template <class F>
struct SpectralPoint {
  std::vector<F> zbar;  // zbar[i] = z^{alpha_i}
  F q;
};

/// z^alpha for alpha given by root index; negative coordinates go through
/// the field inverse.  Throws if some zbar[i] = 0 (non-generic point).
template <class F>
F monomial(const SpectralPoint<F>& z, const std::vector<int>& coords) {
  F out = one_like(z.q);
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    if (is_zero(z.zbar[i])) throw std::domain_error("monomial: z vanishes on a simple root");
    out = out * pow(z.zbar[i], coords[i]);
  }
  return out;
}

template <class F>
F monomial(const RootSystem& rs, const SpectralPoint<F>& z, int root_idx) {
  return monomial(z, rs.coords(root_idx));
}

template <class F>
F monomial(const RootSystem& rs, const SpectralPoint<F>& z, const Root& a) {
  return monomial(z, rs.coords(rs.index_of(a)));
}

/// The torus action: (w.z)^alpha = z^{w^{-1} alpha}.
template <class F>
SpectralPoint<F> act(const WeylGroup& g, WeylElement w, const SpectralPoint<F>& z) {
  WeylElement wi = g.inverse(w);
  SpectralPoint<F> out{std::vector<F>(), z.q};
  out.zbar.reserve(g.rank());
  for (int i = 0; i < g.rank(); ++i)
    out.zbar.push_back(monomial(g.roots(), z, g.act_on_root(wi, g.roots().simple_root(i))));
  return out;
}

/// R(alpha) = (1 - q^{-1} z^alpha) / (1 - z^alpha); throws on z^alpha = 1.
template <class F>
F gk_factor(const RootSystem& rs, const SpectralPoint<F>& z, int root_idx) {
  F za = monomial(rs, z, root_idx);
  F one = one_like(z.q);
  F den = one - za;
  if (is_zero(den)) throw std::domain_error("gk_factor: z^alpha = 1 (non-generic point)");
  return (one - inverse(z.q) * za) / den;
}

template <class F>
F gk_factor(const RootSystem& rs, const SpectralPoint<F>& z, const Root& a) {
  return gk_factor(rs, z, rs.index_of(a));
}

template <class F>
bool is_generic(const RootSystem& rs, const SpectralPoint<F>& z) {
  if (is_zero(z.q) || is_one(z.q)) return false;
  for (size_t i = 0; i < z.zbar.size(); ++i)
    if (is_zero(z.zbar[i])) return false;
  F one = one_like(z.q);
  for (int a = 0; a < rs.positive_count(); ++a)
    if (monomial(rs, z, a) == one) return false;
  return true;
}

/// Deterministic generic point over F_p.  Resamples until generic; the
/// failure probability per draw is O(|roots|/p), so 1000 attempts is beyond
/// overkill, but the loop is bounded anyway.
inline SpectralPoint<Fp> random_generic_point(const WeylGroup& g, uint64_t prime, uint64_t seed) {
  if (!is_prime_u64(prime)) throw std::invalid_argument("random_generic_point: modulus not prime");
  if (prime <= (1ULL << 31)) throw std::invalid_argument("random_generic_point: prime must exceed 2^31");
  SplitMix64 rng(mix_seed(seed, prime));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    SpectralPoint<Fp> z{{}, Fp(2 + rng.below(prime - 2), prime)};
    z.zbar.reserve(g.rank());
    for (int i = 0; i < g.rank(); ++i) z.zbar.push_back(Fp(1 + rng.below(prime - 1), prime));
    if (is_generic(g.roots(), z)) return z;
  }
  throw std::runtime_error("random_generic_point: no generic point in 1000 attempts");
}

/// Rational analogue with small entries, for the --rational backend.
inline SpectralPoint<Rational> random_generic_point_rational(const WeylGroup& g, uint64_t seed) {
  SplitMix64 rng(mix_seed(seed, 0x5261746eULL));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    SpectralPoint<Rational> z{{}, Rational(static_cast<long long>(2 + rng.below(29)))};
    z.zbar.reserve(g.rank());
    for (int i = 0; i < g.rank(); ++i) {
      long long num = static_cast<long long>(2 + rng.below(97));
      long long den = static_cast<long long>(1 + rng.below(7));
      z.zbar.push_back(Rational(num, den));
    }
    if (is_generic(g.roots(), z)) return z;
  }
  throw std::runtime_error("random_generic_point_rational: no generic point in 1000 attempts");
}

}  // namespace casselman
