#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "casselman/rootsys.hpp"

namespace casselman {

/// Handle into a WeylGroup's canonical element table.
struct WeylElement {
  uint32_t idx = 0;

  bool operator==(const WeylElement& o) const { return idx == o.idx; }
  bool operator!=(const WeylElement& o) const { return idx != o.idx; }
  bool operator<(const WeylElement& o) const { return idx < o.idx; }
};

using Word = std::vector<uint8_t>;  // 0-based generator indices

/*
  A finite Weyl group, fully enumerated.

  Elements are stored as permutations of the root list, so equality is
  canonical and multiplication is composition of actions.  After
  enumeration everything is reindexed into the canonical order: by length,
  then by lexicographically smallest reduced word.  This order is a linear
  extension of the Bruhat order and is the row/column order of every matrix
  the library emits.

  Derived tables built once here and immutable afterwards:

    - right/left generator shift tables and the full multiplication table;
    - the length table and one canonical (lex-least) reduced word each;
    - the Bruhat relation as a bit matrix, filled by the memoized descent
      recursion: with s the smallest right descent of v,
      u <= v  iff  (us < u ? us <= vs : u <= vs);
    - the map from positive roots to reflections r_alpha.
*/
class WeylGroup {
 public:
  static WeylGroup build(const CartanType& type) { return WeylGroup(type); }
  static WeylGroup build(const std::string& type) { return WeylGroup(parse_cartan_type(type)); }

  const CartanType& type() const { return type_; }
  const RootSystem& roots() const { return roots_; }
  int rank() const { return roots_.rank(); }
  uint32_t size() const { return n_; }

  WeylElement identity() const { return WeylElement{0}; }
  WeylElement element(uint32_t i) const {
    if (i >= n_) throw std::out_of_range("element index");
    return WeylElement{i};
  }
  WeylElement longest_element() const { return WeylElement{n_ - 1}; }

  int length(WeylElement w) const { return len_[w.idx]; }
  const Word& canonical_word(WeylElement w) const { return word_[w.idx]; }

  /// Reduced-word string with 1-based digits, "" for the identity.
  std::string word_string(WeylElement w) const {
    std::string s;
    for (uint8_t g : word_[w.idx]) s.push_back(static_cast<char>('1' + g));
    return s;
  }

  WeylElement mult(WeylElement a, WeylElement b) const { return WeylElement{mult_[a.idx * n_ + b.idx]}; }
  WeylElement inverse(WeylElement a) const { return WeylElement{inv_[a.idx]}; }
  WeylElement right_mult_gen(WeylElement a, int j) const { return WeylElement{rgen_[a.idx * rank() + j]}; }
  WeylElement left_mult_gen(WeylElement a, int j) const { return WeylElement{lgen_[a.idx * rank() + j]}; }
  WeylElement simple_reflection(int j) const { return right_mult_gen(identity(), j); }

  bool right_descent(WeylElement w, int j) const {
    return len_[rgen_[w.idx * rank() + j]] < len_[w.idx];
  }
  bool left_descent(WeylElement w, int j) const {
    return len_[lgen_[w.idx * rank() + j]] < len_[w.idx];
  }
  int first_right_descent(WeylElement w) const {
    for (int j = 0; j < rank(); ++j)
      if (right_descent(w, j)) return j;
    return -1;
  }
  int first_left_descent(WeylElement w) const {
    for (int j = 0; j < rank(); ++j)
      if (left_descent(w, j)) return j;
    return -1;
  }

  /// Image root index of w applied to root #root_idx.
  int act_on_root(WeylElement w, int root_idx) const { return perm_[w.idx][root_idx]; }
  Root act_on_root(WeylElement w, const Root& a) const {
    return roots_.root(perm_[w.idx][roots_.index_of(a)]);
  }

  /// u <= v in Bruhat order.
  bool bruhat_leq(WeylElement u, WeylElement v) const {
    return (bruhat_[v.idx * bwords_ + (u.idx >> 6)] >> (u.idx & 63)) & 1;
  }
  bool bruhat_lt(WeylElement u, WeylElement v) const { return u != v && bruhat_leq(u, v); }

  /// The reflection r_alpha for a positive root (by index); involution.
  WeylElement reflection(int pos_root_idx) const {
    if (pos_root_idx < 0 || pos_root_idx >= roots_.positive_count())
      throw std::invalid_argument("reflection: root must be positive");
    return WeylElement{refl_[pos_root_idx]};
  }
  WeylElement reflection(const Root& a) const {
    int idx = roots_.index_of(a);
    return reflection(idx);
  }

  /// {alpha > 0 : w(alpha) < 0}, in canonical root order.  Computed directly
  /// from the action and cross-checked against the reduced-word list
  /// {a_{i_k}, s_{i_k}(a_{i_{k-1}}), ...} for the canonical word of w.
  std::vector<int> inversion_set(WeylElement w) const {
    std::vector<int> direct;
    for (int a = 0; a < roots_.positive_count(); ++a)
      if (!roots_.is_positive(perm_[w.idx][a])) direct.push_back(a);
    std::vector<int> via_word;
    const Word& wd = word_[w.idx];
    WeylElement tail = identity();
    for (size_t k = wd.size(); k-- > 0;) {
      // s_{i_n} s_{i_{n-1}} ... s_{i_{k+1}} (alpha_{i_k})
      via_word.push_back(act_on_root(tail, roots_.simple_root(wd[k])));
      tail = mult(tail, simple_reflection(wd[k]));
    }
    std::sort(via_word.begin(), via_word.end());
    if (via_word != direct) throw std::logic_error("inversion set mismatch between routes");
    return direct;
  }

  /// Fold a word (not necessarily reduced) into a group element.
  WeylElement element_from_word(const Word& w) const {
    WeylElement a = identity();
    for (uint8_t j : w) {
      if (j >= static_cast<uint8_t>(rank())) throw std::invalid_argument("generator index out of range");
      a = right_mult_gen(a, j);
    }
    return a;
  }

  /// Enumerate all reduced words of w by DFS over right descents, smallest
  /// generator first.  fn returns false to stop; returns true if exhausted.
  bool for_each_reduced_word(WeylElement w, const std::function<bool(const Word&)>& fn) const {
    Word tail(len_[w.idx]);
    return reduced_word_dfs(w, tail, len_[w.idx], fn);
  }

  std::vector<Word> reduced_words(WeylElement w) const {
    std::vector<Word> out;
    for_each_reduced_word(w, [&](const Word& word) {
      out.push_back(word);
      return true;
    });
    return out;
  }

 private:
  explicit WeylGroup(const CartanType& type) : type_(type), roots_(type) {
    const int r = roots_.rank();
    const int nr = roots_.root_count();

    // enumerate by BFS over right multiplication
    std::vector<std::vector<int32_t>> perms;
    std::map<std::vector<int32_t>, uint32_t> index;
    std::vector<int32_t> ident(nr);
    for (int i = 0; i < nr; ++i) ident[i] = i;
    perms.push_back(ident);
    index[ident] = 0;
    std::vector<uint32_t> frontier{0};
    std::vector<uint16_t> lengths{0};
    while (!frontier.empty()) {
      std::vector<uint32_t> next;
      for (uint32_t wi : frontier) {
        for (int j = 0; j < r; ++j) {
          std::vector<int32_t> q(nr);
          for (int k = 0; k < nr; ++k) q[k] = perms[wi][roots_.reflect_simple(j, k)];
          auto it = index.find(q);
          if (it == index.end()) {
            uint32_t ni = static_cast<uint32_t>(perms.size());
            index.emplace(q, ni);
            perms.push_back(std::move(q));
            lengths.push_back(static_cast<uint16_t>(lengths[wi] + 1));
            next.push_back(ni);
          }
        }
      }
      frontier = std::move(next);
    }
    n_ = static_cast<uint32_t>(perms.size());

    // canonical words via smallest left descent
    std::vector<uint32_t> invTmp(n_);
    for (uint32_t w = 0; w < n_; ++w) {
      std::vector<int32_t> q(nr);
      for (int k = 0; k < nr; ++k) q[perms[w][k]] = k;
      invTmp[w] = index.at(q);
    }
    std::vector<Word> words(n_);
    std::vector<uint32_t> by_len(n_);
    for (uint32_t i = 0; i < n_; ++i) by_len[i] = i;
    std::sort(by_len.begin(), by_len.end(), [&](uint32_t a, uint32_t b) { return lengths[a] < lengths[b]; });
    for (uint32_t w : by_len) {
      if (lengths[w] == 0) continue;
      const auto& pinv = perms[invTmp[w]];
      for (int i = 0; i < r; ++i) {
        if (!roots_.is_positive(pinv[roots_.simple_root(i)])) {  // s_i w < w
          std::vector<int32_t> q(nr);
          for (int k = 0; k < nr; ++k) q[k] = roots_.reflect_simple(i, perms[w][k]);
          uint32_t siw = index.at(q);
          words[w].reserve(words[siw].size() + 1);
          words[w].push_back(static_cast<uint8_t>(i));
          words[w].insert(words[w].end(), words[siw].begin(), words[siw].end());
          break;
        }
      }
    }

    // canonical order: (length, lex word); reindex all tables
    std::vector<uint32_t> order(n_);
    for (uint32_t i = 0; i < n_; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
      if (lengths[a] != lengths[b]) return lengths[a] < lengths[b];
      return words[a] < words[b];
    });
    std::vector<uint32_t> old2new(n_);
    for (uint32_t i = 0; i < n_; ++i) old2new[order[i]] = i;

    perm_.resize(n_);
    len_.resize(n_);
    word_.resize(n_);
    inv_.resize(n_);
    for (uint32_t i = 0; i < n_; ++i) {
      perm_[i] = perms[order[i]];
      len_[i] = lengths[order[i]];
      word_[i] = words[order[i]];
      inv_[i] = old2new[invTmp[order[i]]];
    }

    rgen_.resize(static_cast<size_t>(n_) * r);
    lgen_.resize(static_cast<size_t>(n_) * r);
    for (uint32_t w = 0; w < n_; ++w) {
      for (int j = 0; j < r; ++j) {
        std::vector<int32_t> q(nr);
        for (int k = 0; k < nr; ++k) q[k] = perm_[w][roots_.reflect_simple(j, k)];
        rgen_[w * r + j] = old2new[index.at(q)];
        for (int k = 0; k < nr; ++k) q[k] = roots_.reflect_simple(j, perm_[w][k]);
        lgen_[w * r + j] = old2new[index.at(q)];
      }
    }

    // full multiplication table by folding canonical words
    mult_.resize(static_cast<size_t>(n_) * n_);
    for (uint32_t a = 0; a < n_; ++a) mult_[a * n_ + 0] = a;
    for (uint32_t b = 1; b < n_; ++b) {
      uint8_t last = word_[b].back();
      Word head(word_[b].begin(), word_[b].end() - 1);
      uint32_t bp = 0;
      for (uint8_t j : head) bp = rgen_[bp * r + j];
      for (uint32_t a = 0; a < n_; ++a) mult_[a * n_ + b] = rgen_[mult_[a * n_ + bp] * r + last];
    }

    // Bruhat bit matrix by the descent recursion, elements in length order
    bwords_ = (n_ + 63) / 64;
    bruhat_.assign(static_cast<size_t>(n_) * bwords_, 0);
    bruhat_[0] |= 1;  // e <= e
    for (uint32_t v = 1; v < n_; ++v) {
      int s = -1;
      for (int j = 0; j < r; ++j)
        if (len_[rgen_[v * r + j]] < len_[v]) { s = j; break; }
      uint32_t vs = rgen_[v * r + s];
      uint64_t* row = &bruhat_[static_cast<size_t>(v) * bwords_];
      const uint64_t* prow = &bruhat_[static_cast<size_t>(vs) * bwords_];
      for (uint32_t u = 0; u < n_; ++u) {
        uint32_t us = rgen_[u * r + s];
        uint32_t uu = len_[us] < len_[u] ? us : u;
        if ((prow[uu >> 6] >> (uu & 63)) & 1) row[u >> 6] |= 1ULL << (u & 63);
      }
    }

    // reflections from root arithmetic
    refl_.resize(roots_.positive_count());
    std::map<std::vector<int32_t>, uint32_t> newindex;
    for (uint32_t i = 0; i < n_; ++i) newindex[perm_[i]] = i;
    for (int a = 0; a < roots_.positive_count(); ++a) {
      std::vector<int32_t> q(nr);
      for (int k = 0; k < nr; ++k) q[k] = roots_.reflect(a, k);
      refl_[a] = newindex.at(q);
    }
  }

  bool reduced_word_dfs(WeylElement w, Word& tail, int depth,
                        const std::function<bool(const Word&)>& fn) const {
    if (depth == 0) return fn(tail);
    for (int j = 0; j < rank(); ++j) {
      WeylElement ws = right_mult_gen(w, j);
      if (len_[ws.idx] < len_[w.idx]) {
        tail[depth - 1] = static_cast<uint8_t>(j);
        if (!reduced_word_dfs(ws, tail, depth - 1, fn)) return false;
      }
    }
    return true;
  }

  CartanType type_;
  RootSystem roots_;
  uint32_t n_ = 0;
  std::vector<std::vector<int32_t>> perm_;
  std::vector<uint16_t> len_;
  std::vector<Word> word_;
  std::vector<uint32_t> inv_;
  std::vector<uint32_t> rgen_, lgen_;
  std::vector<uint32_t> mult_;
  uint32_t bwords_ = 0;
  std::vector<uint64_t> bruhat_;
  std::vector<uint32_t> refl_;
};

}  // namespace casselman
