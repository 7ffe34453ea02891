#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace casselman {

enum class CartanFamily : char { A = 'A', B = 'B', C = 'C', D = 'D', G = 'G' };

struct CartanType {
  CartanFamily family;
  int rank;

  std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
  bool operator==(const CartanType& o) const { return family == o.family && rank == o.rank; }
};

// Supported instances: A1-A5, B2-B4, C2-C4, D4, G2.
inline bool is_supported(const CartanType& t) {
  switch (t.family) {
    case CartanFamily::A: return t.rank >= 1 && t.rank <= 5;
    case CartanFamily::B: return t.rank >= 2 && t.rank <= 4;
    case CartanFamily::C: return t.rank >= 2 && t.rank <= 4;
    case CartanFamily::D: return t.rank == 4;
    case CartanFamily::G: return t.rank == 2;
  }
  return false;
}

inline CartanType parse_cartan_type(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad Cartan type: " + s);
  char f = s[0];
  if (f != 'A' && f != 'B' && f != 'C' && f != 'D' && f != 'G')
    throw std::invalid_argument("bad Cartan family: " + s);
  int rank = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad Cartan rank: " + s);
    rank = rank * 10 + (s[i] - '0');
  }
  CartanType t{static_cast<CartanFamily>(f), rank};
  if (!is_supported(t)) throw std::invalid_argument("unsupported Cartan type: " + s);
  return t;
}

// Cartan matrix with entries C[i][j] = 2(a_i,a_j)/(a_j,a_j), so the simple
// reflection acts by s_j(a_i) = a_i - C[i][j] a_j.  B-family convention: the
// last simple root is the short one, which for B2 makes alpha_1 long and
// alpha_2 short (C[0][1] = -2, C[1][0] = -1).
inline std::vector<std::vector<int>> cartan_matrix(const CartanType& t) {
  if (!is_supported(t)) throw std::invalid_argument("unsupported Cartan type: " + t.name());
  int r = t.rank;
  std::vector<std::vector<int>> c(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) c[i][i] = 2;
  auto chain_edge = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
  switch (t.family) {
    case CartanFamily::A:
      for (int i = 0; i + 1 < r; ++i) chain_edge(i, i + 1);
      break;
    case CartanFamily::B:
      for (int i = 0; i + 1 < r; ++i) chain_edge(i, i + 1);
      c[r - 2][r - 1] = -2;
      break;
    case CartanFamily::C:
      for (int i = 0; i + 1 < r; ++i) chain_edge(i, i + 1);
      c[r - 1][r - 2] = -2;
      break;
    case CartanFamily::D:
      chain_edge(0, 1);
      chain_edge(1, 2);
      chain_edge(1, 3);
      break;
    case CartanFamily::G:
      c[0][1] = -1;
      c[1][0] = -3;
      break;
  }
  return c;
}

// Symmetrizers d_i = (a_i,a_i)/2 scaled to integers, so (a_i,a_j) = C[i][j]*d_j.
inline std::vector<int> cartan_symmetrizer(const CartanType& t) {
  int r = t.rank;
  switch (t.family) {
    case CartanFamily::A: return std::vector<int>(r, 1);
    case CartanFamily::D: return std::vector<int>(r, 1);
    case CartanFamily::B: {
      std::vector<int> d(r, 2);
      d[r - 1] = 1;
      return d;
    }
    case CartanFamily::C: {
      std::vector<int> d(r, 1);
      d[r - 1] = 2;
      return d;
    }
    case CartanFamily::G: return {1, 3};
  }
  throw std::invalid_argument("unsupported Cartan type");
}

}  // namespace casselman
