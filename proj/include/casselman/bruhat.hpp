#pragma once

#include <optional>
#include <vector>

#include "casselman/kl.hpp"
#include "casselman/weyl.hpp"

namespace casselman {

/*
  The order-theoretic sets attached to a Bruhat pair u <= v:

    S (u,v) = {alpha > 0 : u <= v r_alpha < v}
    S'(u,v) = {alpha > 0 : u <  u r_alpha <= v}

  Both are the specializations y = v resp. y = u of the Deodhar set
  {alpha > 0 : u <= y r_alpha <= v} (y r_alpha = y never happens), so both
  have cardinality >= l(v) - l(u) whenever u <= v.
*/

/// S(u,v), as positive-root indices in canonical root order.
inline std::vector<int> s_set(const WeylGroup& g, WeylElement u, WeylElement v) {
  std::vector<int> out;
  for (int a = 0; a < g.roots().positive_count(); ++a) {
    WeylElement vr = g.mult(v, g.reflection(a));
    if (g.length(vr) < g.length(v) && g.bruhat_leq(u, vr)) out.push_back(a);
  }
  return out;
}

/// S'(u,v), as positive-root indices in canonical root order.
inline std::vector<int> sprime_set(const WeylGroup& g, WeylElement u, WeylElement v) {
  std::vector<int> out;
  for (int a = 0; a < g.roots().positive_count(); ++a) {
    WeylElement ur = g.mult(u, g.reflection(a));
    if (g.length(ur) > g.length(u) && g.bruhat_leq(ur, v)) out.push_back(a);
  }
  return out;
}

/// #{alpha > 0 : u <= y r_alpha <= v}; requires u <= y <= v.
inline int deodhar_count(const WeylGroup& g, WeylElement u, WeylElement y, WeylElement v) {
  if (!g.bruhat_leq(u, y) || !g.bruhat_leq(y, v))
    throw std::invalid_argument("deodhar_count: need u <= y <= v");
  int count = 0;
  for (int a = 0; a < g.roots().positive_count(); ++a) {
    WeylElement yr = g.mult(y, g.reflection(a));
    if (g.bruhat_leq(u, yr) && g.bruhat_leq(yr, v)) ++count;
  }
  return count;
}

/// u if u < us, else us.
inline WeylElement ominus(const WeylGroup& g, WeylElement u, int s) {
  WeylElement us = g.right_mult_gen(u, s);
  return g.length(us) > g.length(u) ? u : us;
}

/// [u, v] = {t : u <= t <= v}, canonical order; requires u <= v.
inline std::vector<WeylElement> interval(const WeylGroup& g, WeylElement u, WeylElement v) {
  if (!g.bruhat_leq(u, v)) throw std::invalid_argument("interval: u is not <= v");
  std::vector<WeylElement> out;
  for (uint32_t t = 0; t < g.size(); ++t) {
    WeylElement te{t};
    if (g.bruhat_leq(u, te) && g.bruhat_leq(te, v)) out.push_back(te);
  }
  return out;
}

namespace detail {

// prefix[j] = s_1..s_j and suffix[j] = s_j..s_n for a word, so the product
// with position j omitted is prefix[j-1] * suffix[j+1] in O(1).
struct WordSplits {
  std::vector<WeylElement> prefix;  // size n+1, prefix[0] = e
  std::vector<WeylElement> suffix;  // size n+2, suffix[n+1] = e

  WordSplits(const WeylGroup& g, const Word& w) {
    size_t n = w.size();
    prefix.assign(n + 1, g.identity());
    suffix.assign(n + 2, g.identity());
    for (size_t j = 0; j < n; ++j) prefix[j + 1] = g.right_mult_gen(prefix[j], w[j]);
    for (size_t j = n; j >= 1; --j) suffix[j] = g.left_mult_gen(suffix[j + 1], w[j - 1]);
  }

  WeylElement omit(const WeylGroup& g, size_t j) const {  // 1-based position
    return g.mult(prefix[j - 1], suffix[j + 1]);
  }
};

}  // namespace detail

/// The deletable positions of a reduced word s_1..s_n with respect to u:
/// {j : u <= s_1..^s_j..s_n}, ascending (1-based).  The word is good for u
/// exactly when deleting all of them yields u; returns the positions then,
/// nullopt otherwise.  Throws if the word is not reduced.
inline std::optional<std::vector<int>> is_good_word(const WeylGroup& g, const Word& word,
                                                    WeylElement u) {
  detail::WordSplits sp(g, word);
  WeylElement v = sp.prefix[word.size()];
  if (g.length(v) != static_cast<int>(word.size()))
    throw std::invalid_argument("is_good_word: word is not reduced");
  std::vector<int> positions;
  for (size_t j = 1; j <= word.size(); ++j)
    if (g.bruhat_leq(u, sp.omit(g, j))) positions.push_back(static_cast<int>(j));
  WeylElement prod = g.identity();
  size_t next = 0;
  for (size_t j = 1; j <= word.size(); ++j) {
    if (next < positions.size() && positions[next] == static_cast<int>(j)) {
      ++next;
      continue;
    }
    prod = g.right_mult_gen(prod, word[j - 1]);
  }
  if (prod == u) return positions;
  return std::nullopt;
}

/// A good word for v with respect to u, with the omitted positions and the
/// roots gamma_k = s_n..s_{j_k+1}(alpha_{j_k}) they contribute; {gamma_k}
/// always equals S(u,v).
struct GoodWord {
  Word word;
  std::vector<int> omitted;       // ascending, 1-based
  std::vector<int> gamma_roots;   // positive-root indices, parallel to omitted
};

/// First good word in the deterministic reduced-word order, or nullopt after
/// exhausting every reduced word of v.  Requires u <= v.
inline std::optional<GoodWord> find_good_word(const WeylGroup& g, WeylElement u, WeylElement v) {
  if (!g.bruhat_leq(u, v)) throw std::invalid_argument("find_good_word: u is not <= v");
  std::optional<GoodWord> hit;
  g.for_each_reduced_word(v, [&](const Word& word) {
    auto positions = is_good_word(g, word, u);
    if (!positions) return true;
    GoodWord gw;
    gw.word = word;
    gw.omitted = *positions;
    detail::WordSplits sp(g, word);
    for (int j : gw.omitted) {
      int alpha = g.roots().simple_root(word[j - 1]);
      // gamma = s_n s_{n-1} .. s_{j+1} (alpha_j): the reversed suffix, i.e.
      // the inverse of suffix[j+1]
      gw.gamma_roots.push_back(g.act_on_root(g.inverse(sp.suffix[j + 1]), alpha));
    }
    hit = std::move(gw);
    return false;
  });
  return hit;
}

/// Test whether left multiplication by r_beta maps [u,v] onto itself; since
/// the map is an involution of W, closure of the interval is equivalent to
/// the two-sided condition u <= t <= v  iff  u <= r_beta t <= v.
inline bool stabilizes_interval(const WeylGroup& g, int beta, WeylElement u, WeylElement v) {
  WeylElement rb = g.reflection(beta);
  for (uint32_t t = 0; t < g.size(); ++t) {
    WeylElement te{t};
    if (!g.bruhat_leq(u, te) || !g.bruhat_leq(te, v)) continue;
    WeylElement im = g.mult(rb, te);
    if (!g.bruhat_leq(u, im) || !g.bruhat_leq(im, v)) return false;
  }
  return true;
}

/// First positive root beta (canonical root order) with
/// u <= t <= v  iff  u <= r_beta t <= v; requires u < v.
inline std::optional<int> stabilizing_reflection(const WeylGroup& g, WeylElement u, WeylElement v) {
  if (!g.bruhat_lt(u, v)) throw std::invalid_argument("stabilizing_reflection: need u < v");
  for (int b = 0; b < g.roots().positive_count(); ++b)
    if (stabilizes_interval(g, b, u, v)) return b;
  return std::nullopt;
}

/// All stabilizing reflections (verbose mode).
inline std::vector<int> stabilizing_reflections(const WeylGroup& g, WeylElement u, WeylElement v) {
  if (!g.bruhat_lt(u, v)) throw std::invalid_argument("stabilizing_reflections: need u < v");
  std::vector<int> out;
  for (int b = 0; b < g.roots().positive_count(); ++b)
    if (stabilizes_interval(g, b, u, v)) out.push_back(b);
  return out;
}

/// Everything the reports know about one Bruhat pair.
struct PairClassification {
  WeylElement u, v;
  std::vector<int> s;        // S(u,v), positive-root indices
  std::vector<int> sprime;   // S'(u,v)
  bool deodhar_tight = false;  // |S| = l(v) - l(u)
  bool kl_one = false;         // P_{u,v} = 1
  bool kl_dual_one = false;    // P_{w0 v, w0 u} = 1
  std::optional<GoodWord> good_word;
  std::optional<int> stabilizer;  // positive-root index
};

inline PairClassification classify_pair(const WeylGroup& g, KLTable& kl, WeylElement u,
                                        WeylElement v) {
  if (!g.bruhat_leq(u, v)) throw std::invalid_argument("classify_pair: u is not <= v");
  PairClassification pc;
  pc.u = u;
  pc.v = v;
  pc.s = s_set(g, u, v);
  pc.sprime = sprime_set(g, u, v);
  pc.deodhar_tight = static_cast<int>(pc.s.size()) == g.length(v) - g.length(u);
  WeylElement w0 = g.longest_element();
  pc.kl_one = kl.kl_polynomial(u, v).is_one();
  pc.kl_dual_one = kl.kl_polynomial(g.mult(w0, v), g.mult(w0, u)).is_one();
  pc.good_word = find_good_word(g, u, v);
  if (u != v) pc.stabilizer = stabilizing_reflection(g, u, v);
  return pc;
}

}  // namespace casselman
