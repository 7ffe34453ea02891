#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "casselman/cartan.hpp"

namespace casselman {

enum class LengthClass { Long, Short };

/// A root given by its integer coordinates on the simple roots.
struct Root {
  std::vector<int> coords;

  bool operator==(const Root& o) const { return coords == o.coords; }
  bool operator<(const Root& o) const { return coords < o.coords; }
};

/*
  The finite root system of a Cartan type, enumerated by closing the simple
  roots under the simple reflections.  Roots are indexed 0..2m-1 with the m
  positive roots first, ordered by (height, lexicographic coordinates); the
  negative of root i is at index i+m.  That ordering is the canonical root
  order used everywhere a list of roots is reported.
*/
class RootSystem {
 public:
  explicit RootSystem(const CartanType& type)
      : type_(type), cartan_(cartan_matrix(type)), sym_(cartan_symmetrizer(type)) {
    const int r = type.rank;
    std::vector<std::vector<int>> found;
    std::map<std::vector<int>, int> seen;
    for (int i = 0; i < r; ++i) {
      std::vector<int> e(r, 0);
      e[i] = 1;
      seen[e] = 1;
      found.push_back(e);
    }
    for (size_t k = 0; k < found.size(); ++k) {
      for (int j = 0; j < r; ++j) {
        std::vector<int> im = reflect_coords(found[k], j);
        if (!seen.count(im)) {
          seen[im] = 1;
          found.push_back(im);
        }
      }
    }
    std::vector<std::vector<int>> pos;
    for (auto& b : found)
      if (std::all_of(b.begin(), b.end(), [](int c) { return c >= 0; })) pos.push_back(b);
    std::sort(pos.begin(), pos.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
      int ha = std::accumulate(a.begin(), a.end(), 0);
      int hb = std::accumulate(b.begin(), b.end(), 0);
      if (ha != hb) return ha < hb;
      return a < b;
    });
    npos_ = static_cast<int>(pos.size());
    coords_ = pos;
    for (auto& b : pos) {
      std::vector<int> neg(b.size());
      for (size_t i = 0; i < b.size(); ++i) neg[i] = -b[i];
      coords_.push_back(neg);
    }
    for (int i = 0; i < static_cast<int>(coords_.size()); ++i) index_[coords_[i]] = i;
    simple_idx_.resize(r);
    for (int i = 0; i < r; ++i) {
      std::vector<int> e(r, 0);
      e[i] = 1;
      simple_idx_[i] = index_.at(e);
    }
    norm2_.resize(coords_.size());
    long long maxn = 0;
    for (size_t i = 0; i < coords_.size(); ++i) {
      norm2_[i] = inner(coords_[i], coords_[i]);
      maxn = std::max(maxn, norm2_[i]);
    }
    max_norm2_ = maxn;
    srefl_.assign(r, std::vector<int>(coords_.size()));
    for (int j = 0; j < r; ++j)
      for (size_t i = 0; i < coords_.size(); ++i) srefl_[j][i] = index_.at(reflect_coords(coords_[i], j));
  }

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  int positive_count() const { return npos_; }
  int root_count() const { return static_cast<int>(coords_.size()); }

  const std::vector<int>& coords(int idx) const { return coords_[idx]; }
  Root root(int idx) const { return Root{coords_[idx]}; }
  int simple_root(int j) const { return simple_idx_[j]; }
  bool is_positive(int idx) const { return idx < npos_; }
  int negate(int idx) const { return idx < npos_ ? idx + npos_ : idx - npos_; }
  int height(int idx) const {
    return std::accumulate(coords_[idx].begin(), coords_[idx].end(), 0);
  }
  int max_height() const { return height(npos_ - 1); }

  LengthClass length_class(int idx) const {
    return norm2_[idx] == max_norm2_ ? LengthClass::Long : LengthClass::Short;
  }

  /// Index of a root given by coordinates; throws if not a root.
  int index_of(const std::vector<int>& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) throw std::invalid_argument("not a root of " + type_.name());
    return it->second;
  }
  int index_of(const Root& a) const { return index_of(a.coords); }

  /// s_j applied to root #idx.
  int reflect_simple(int j, int idx) const { return srefl_[j][idx]; }

  /// r_alpha applied to root #idx (alpha by index, need not be simple):
  /// beta - <beta, alpha^vee> alpha.
  int reflect(int alpha, int idx) const {
    long long pairing = 2 * inner(coords_[idx], coords_[alpha]);
    if (pairing % norm2_[alpha] != 0) throw std::logic_error("non-integral coroot pairing");
    long long k = pairing / norm2_[alpha];
    std::vector<int> im(coords_[idx]);
    for (size_t i = 0; i < im.size(); ++i) im[i] -= static_cast<int>(k) * coords_[alpha][i];
    return index_.at(im);
  }

 private:
  std::vector<int> reflect_coords(const std::vector<int>& b, int j) const {
    // s_j changes only coordinate j: c_j -> c_j - sum_i c_i C[i][j]
    long long pair = 0;
    for (size_t i = 0; i < b.size(); ++i) pair += static_cast<long long>(b[i]) * cartan_[i][j];
    std::vector<int> out(b);
    out[j] -= static_cast<int>(pair);
    return out;
  }

  long long inner(const std::vector<int>& a, const std::vector<int>& b) const {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j)
        s += static_cast<long long>(a[i]) * b[j] * cartan_[i][j] * sym_[j];
    return s;
  }

  CartanType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> sym_;
  int npos_ = 0;
  std::vector<std::vector<int>> coords_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> simple_idx_;
  std::vector<long long> norm2_;
  long long max_norm2_ = 0;
  std::vector<std::vector<int>> srefl_;
};

}  // namespace casselman
