#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "casselman/spectral.hpp"

namespace casselman {

/*
  The finite Iwahori-Hecke algebra H in the t-basis, over a field with the
  deformation parameter q specialized to a field element.  The quadratic
  relation t_i^2 = (q-1) t_i + q together with length-additivity gives the
  one multiplication primitive everything reduces to:

      t_w t_s = t_{ws}                  if ws > w
              = q t_{ws} + (q-1) t_w    if ws < w

  and its mirror image for t_s t_w.  General products fold one factor's
  reduced word through these rules.

  The intertwining element mu_z(w) is built from the simple-reflection case

      mu_z(s_i) = q^{-1} t_i + (1 - q^{-1}) z^{alpha_i} / (1 - z^{alpha_i})

  by the cocycle rule mu_z(w1 w2) = mu_z(w2) mu_{w2 z}(w1) along the
  canonical reduced word; the result is word-independent.  Transition
  values are m_z(u,v) = Lambda(psi(u) mu_z(v)) where psi(u) = sum of t_w
  over w >= u and Lambda reads off the coefficient of t_1.
*/

template <class F>
struct HeckeElement {
  std::map<uint32_t, F> coeffs;  // element index -> coefficient, no explicit zeros

  bool operator==(const HeckeElement& o) const { return coeffs == o.coeffs; }
  bool operator!=(const HeckeElement& o) const { return !(*this == o); }
};

template <class F>
HeckeElement<F> hecke_unit(const F& one) {
  HeckeElement<F> h;
  h.coeffs.emplace(0, one);
  return h;
}

template <class F>
HeckeElement<F> hecke_basis(WeylElement w, const F& one) {
  HeckeElement<F> h;
  h.coeffs.emplace(w.idx, one);
  return h;
}

template <class F>
F coeff_or(const HeckeElement<F>& h, WeylElement w, const F& fallback) {
  auto it = h.coeffs.find(w.idx);
  return it == h.coeffs.end() ? fallback : it->second;
}

/// Coefficient of t_1 (the unit double coset).
template <class F>
F lambda(const HeckeElement<F>& h, const F& zero) {
  return coeff_or(h, WeylElement{0}, zero);
}

namespace detail {

template <class F>
void add_term(std::map<uint32_t, F>& acc, uint32_t w, const F& c) {
  auto it = acc.find(w);
  if (it == acc.end()) {
    if (!is_zero(c)) acc.emplace(w, c);
    return;
  }
  it->second = it->second + c;
  if (is_zero(it->second)) acc.erase(it);
}

}  // namespace detail

/// h * t_{s_j}.
template <class F>
HeckeElement<F> mult_basis_right(const WeylGroup& g, const HeckeElement<F>& h, int j, const F& q) {
  F qm1 = q - one_like(q);
  HeckeElement<F> out;
  for (const auto& [w, c] : h.coeffs) {
    WeylElement ws = g.right_mult_gen(WeylElement{w}, j);
    if (g.length(ws) > g.length(WeylElement{w})) {
      detail::add_term(out.coeffs, ws.idx, c);
    } else {
      detail::add_term(out.coeffs, ws.idx, c * q);
      detail::add_term(out.coeffs, w, c * qm1);
    }
  }
  return out;
}

/// t_{s_j} * h.
template <class F>
HeckeElement<F> mult_basis_left(const WeylGroup& g, int j, const HeckeElement<F>& h, const F& q) {
  F qm1 = q - one_like(q);
  HeckeElement<F> out;
  for (const auto& [w, c] : h.coeffs) {
    WeylElement sw = g.left_mult_gen(WeylElement{w}, j);
    if (g.length(sw) > g.length(WeylElement{w})) {
      detail::add_term(out.coeffs, sw.idx, c);
    } else {
      detail::add_term(out.coeffs, sw.idx, c * q);
      detail::add_term(out.coeffs, w, c * qm1);
    }
  }
  return out;
}

/// General product, folding reduced words of the right factor's terms.
template <class F>
HeckeElement<F> hecke_mult(const WeylGroup& g, const HeckeElement<F>& a, const HeckeElement<F>& b,
                           const F& q) {
  HeckeElement<F> out;
  for (const auto& [w, c] : b.coeffs) {
    HeckeElement<F> part = a;
    for (uint8_t j : g.canonical_word(WeylElement{w})) part = mult_basis_right(g, part, j, q);
    for (const auto& [x, cx] : part.coeffs) detail::add_term(out.coeffs, x, cx * c);
  }
  return out;
}

/// psi(u) = sum of t_w over w >= u, all coefficients 1.
template <class F>
HeckeElement<F> psi(const WeylGroup& g, WeylElement u, const F& one) {
  HeckeElement<F> h;
  for (uint32_t w = 0; w < g.size(); ++w)
    if (g.bruhat_leq(u, WeylElement{w})) h.coeffs.emplace(w, one);
  return h;
}

namespace detail {

// scalar part of mu_z(s_j): (1 - q^{-1}) z^{alpha_j} / (1 - z^{alpha_j})
template <class F>
F mu_simple_constant(const WeylGroup& g, const SpectralPoint<F>& z, int j) {
  F za = monomial(g.roots(), z, g.roots().simple_root(j));
  F one = one_like(z.q);
  F den = one - za;
  if (is_zero(den)) throw std::domain_error("mu: z^alpha = 1 for a twisted parameter (non-generic z)");
  return (one - inverse(z.q)) * za / den;
}

// acc <- acc * mu_{z}(s_j) = q^{-1} acc t_j + const * acc
template <class F>
void fold_mu_factor(const WeylGroup& g, HeckeElement<F>& acc, const SpectralPoint<F>& z, int j) {
  F iq = inverse(z.q);
  F c = mu_simple_constant(g, z, j);
  HeckeElement<F> shifted = mult_basis_right(g, acc, j, z.q);
  HeckeElement<F> out;
  for (const auto& [w, cw] : shifted.coeffs) add_term(out.coeffs, w, cw * iq);
  for (const auto& [w, cw] : acc.coeffs) add_term(out.coeffs, w, cw * c);
  acc = std::move(out);
}

}  // namespace detail

/// mu_z(w) computed along an arbitrary reduced word of w (exposed so tests
/// can verify word independence).
template <class F>
HeckeElement<F> mu_from_word(const WeylGroup& g, const Word& word, const SpectralPoint<F>& z) {
  HeckeElement<F> acc = hecke_unit(one_like(z.q));
  SpectralPoint<F> zc = z;
  for (size_t k = word.size(); k-- > 0;) {
    detail::fold_mu_factor(g, acc, zc, word[k]);
    zc = act(g, g.simple_reflection(word[k]), zc);
  }
  return acc;
}

/// mu_z(w) along the canonical reduced word.
template <class F>
HeckeElement<F> mu(const WeylGroup& g, WeylElement w, const SpectralPoint<F>& z) {
  return mu_from_word(g, g.canonical_word(w), z);
}

/// m_z(u,v) = Lambda(psi(u) mu_z(v)), folding psi(u) through the mu factors
/// directly; used stand-alone and as the per-pair route in sweeps.
template <class F>
F m_value(const WeylGroup& g, WeylElement u, WeylElement v, const SpectralPoint<F>& z) {
  HeckeElement<F> acc = psi(g, u, one_like(z.q));
  SpectralPoint<F> zc = z;
  const Word& word = g.canonical_word(v);
  for (size_t k = word.size(); k-- > 0;) {
    detail::fold_mu_factor(g, acc, zc, word[k]);
    zc = act(g, g.simple_reflection(word[k]), zc);
  }
  return lambda(acc, zero_like(z.q));
}

/// The transition matrices m(u,v) and their inverse, rows/columns in the
/// group's canonical order (a linear extension of Bruhat order).
template <class F>
struct TransitionMatrices {
  SpectralPoint<F> z;
  std::vector<std::vector<F>> M;       // M[u][v] = m(u,v)
  std::vector<std::vector<F>> Mtilde;  // inverse, same indexing
};

/*
  Full matrix build.  For each column v the products t_w mu_z(v) are
  accumulated over all w by one left-multiplication sweep up the left Cayley
  tree (t_w = t_{s_i} t_{w'} for the first left descent i), which costs
  O(|W| l(w0)) basis operations per column instead of one fold per pair.
  Then m(u,v) = sum of Lambda(t_w mu_z(v)) over w >= u.

  Unitriangularity (m(u,v) = 0 unless u <= v, diagonal exactly 1) is
  asserted before the inverse is formed by back-substitution in canonical
  order, and both products M Mtilde and Mtilde M are verified to be the
  identity before returning.  Any division by a vanishing 1 - z^beta aborts
  the whole computation.
*/
template <class F>
TransitionMatrices<F> m_matrix(const WeylGroup& g, const SpectralPoint<F>& z) {
  const uint32_t n = g.size();
  const F zero = zero_like(z.q);
  const F one = one_like(z.q);
  TransitionMatrices<F> tm{z, {}, {}};
  tm.M.assign(n, std::vector<F>(n, zero));

  std::vector<std::vector<F>> H(n);  // H[w] = t_w * mu_z(v), dense
  for (uint32_t v = 0; v < n; ++v) {
    HeckeElement<F> muv = mu(g, WeylElement{v}, z);
    H[0].assign(n, zero);
    for (const auto& [w, c] : muv.coeffs) H[0][w] = c;
    F qm1 = z.q - one;
    for (uint32_t w = 1; w < n; ++w) {
      int i = g.first_left_descent(WeylElement{w});
      uint32_t wp = g.left_mult_gen(WeylElement{w}, i).idx;
      const std::vector<F>& src = H[wp];
      std::vector<F>& dst = H[w];
      dst.assign(n, zero);
      for (uint32_t x = 0; x < n; ++x) {
        if (is_zero(src[x])) continue;
        WeylElement sx = g.left_mult_gen(WeylElement{x}, i);
        if (g.length(sx) > g.length(WeylElement{x})) {
          dst[sx.idx] = dst[sx.idx] + src[x];
        } else {
          dst[sx.idx] = dst[sx.idx] + src[x] * z.q;
          dst[x] = dst[x] + src[x] * qm1;
        }
      }
    }
    for (uint32_t u = 0; u < n; ++u) {
      F sum = zero;
      for (uint32_t w = u; w < n; ++w)
        if (g.bruhat_leq(WeylElement{u}, WeylElement{w})) sum = sum + H[w][0];
      if (g.bruhat_leq(WeylElement{u}, WeylElement{v})) {
        tm.M[u][v] = sum;
      } else if (!is_zero(sum)) {
        throw std::runtime_error("m_matrix: nonzero entry above the Bruhat relation");
      }
    }
    if (!(tm.M[v][v] == one)) throw std::runtime_error("m_matrix: diagonal entry is not 1");
  }

  // inverse by back-substitution along the canonical order
  tm.Mtilde.assign(n, std::vector<F>(n, zero));
  for (uint32_t i = 0; i < n; ++i) {
    tm.Mtilde[i][i] = one;
    for (uint32_t j = i + 1; j < n; ++j) {
      F s = zero;
      for (uint32_t k = i; k < j; ++k) {
        if (is_zero(tm.Mtilde[i][k]) || is_zero(tm.M[k][j])) continue;
        s = s + tm.Mtilde[i][k] * tm.M[k][j];
      }
      tm.Mtilde[i][j] = -s;
    }
  }
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = i; j < n; ++j) {
      F ab = zero, ba = zero;
      for (uint32_t k = i; k <= j; ++k) {
        ab = ab + tm.M[i][k] * tm.Mtilde[k][j];
        ba = ba + tm.Mtilde[i][k] * tm.M[k][j];
      }
      F expect = i == j ? one : zero;
      if (!(ab == expect) || !(ba == expect))
        throw std::runtime_error("m_matrix: inverse verification failed");
    }
  }
  return tm;
}

/// Row v of Mtilde: the psi-coordinates of the Casselman basis vector f_v.
template <class F>
std::vector<F> casselman_to_psi(const WeylGroup& g, WeylElement v, const TransitionMatrices<F>& tm) {
  (void)g;
  return tm.Mtilde[v.idx];
}

enum class BasisDirection { PsiToPhi, PhiToPsi };

/// Change of coordinates between the psi and phi bases: psi_u expands as the
/// sum of phi_v over v >= u, and phi_u as the alternating sum of psi_v.
template <class F>
std::vector<F> psi_phi_transform(const WeylGroup& g, BasisDirection dir, const std::vector<F>& in) {
  if (in.size() != g.size() || in.empty())
    throw std::invalid_argument("psi_phi_transform: bad vector size");
  F zero = zero_like(in[0]);
  std::vector<F> out(in.size(), zero);
  for (uint32_t v = 0; v < g.size(); ++v) {
    F acc = zero;
    for (uint32_t u = 0; u <= v; ++u) {
      if (!g.bruhat_leq(WeylElement{u}, WeylElement{v})) continue;
      if (dir == BasisDirection::PsiToPhi) {
        acc = acc + in[u];
      } else {
        int d = g.length(WeylElement{v}) - g.length(WeylElement{u});
        acc = d % 2 == 0 ? acc + in[u] : acc - in[u];
      }
    }
    out[v] = acc;
  }
  return out;
}

}  // namespace casselman
