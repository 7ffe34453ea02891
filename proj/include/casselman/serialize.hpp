#pragma once

#include <string>

#include "casselman/bruhat.hpp"
#include "casselman/hecke.hpp"
#include "casselman/verify.hpp"

#include "json.hpp"

namespace casselman {

using nlohmann::json;

// JSON conventions (see docs/SCHEMAS.md): Weyl elements are reduced-word
// strings of 1-based generator digits ("" = identity), roots are integer
// coordinate arrays on the simple roots, field values are decimal strings
// (numerator/denominator for the rational backend).

inline json root_json(const RootSystem& rs, int idx) { return json(rs.coords(idx)); }

inline json roots_json(const RootSystem& rs, const std::vector<int>& idxs) {
  json a = json::array();
  for (int i : idxs) a.push_back(root_json(rs, i));
  return a;
}

inline json group_json(const WeylGroup& g) {
  json j;
  j["type"] = g.type().name();
  j["order"] = g.size();
  j["rank"] = g.rank();
  j["positive_roots"] = g.roots().positive_count();
  j["longest_length"] = g.length(g.longest_element());
  json elems = json::array();
  for (uint32_t i = 0; i < g.size(); ++i) {
    WeylElement w{i};
    elems.push_back({{"word", g.word_string(w)}, {"length", g.length(w)}});
  }
  j["elements"] = elems;
  uint64_t pairs = 0;
  for (uint32_t u = 0; u < g.size(); ++u)
    for (uint32_t v = 0; v < g.size(); ++v)
      if (g.bruhat_leq(WeylElement{u}, WeylElement{v})) ++pairs;
  j["bruhat_pairs"] = pairs;
  return j;
}

inline json good_word_json(const WeylGroup& g, const GoodWord& gw) {
  std::string w;
  for (uint8_t c : gw.word) w.push_back(static_cast<char>('1' + c));
  return json{{"word", w},
              {"omitted", gw.omitted},
              {"gammas", roots_json(g.roots(), gw.gamma_roots)}};
}

inline json pair_json(const WeylGroup& g, const PairClassification& pc) {
  json j;
  j["u"] = g.word_string(pc.u);
  j["v"] = g.word_string(pc.v);
  j["length_diff"] = g.length(pc.v) - g.length(pc.u);
  j["S"] = roots_json(g.roots(), pc.s);
  j["Sprime"] = roots_json(g.roots(), pc.sprime);
  j["deodhar_tight"] = pc.deodhar_tight;
  j["kl_one"] = pc.kl_one;
  j["kl_dual_one"] = pc.kl_dual_one;
  j["good_word"] = pc.good_word ? good_word_json(g, *pc.good_word) : json(nullptr);
  j["stabilizer"] = pc.stabilizer ? root_json(g.roots(), *pc.stabilizer) : json(nullptr);
  j["stabilizers"] =
      pc.u == pc.v ? json::array() : roots_json(g.roots(), stabilizing_reflections(g, pc.u, pc.v));
  return j;
}

inline json kl_polynomial_json(const WeylGroup& g, WeylElement u, WeylElement v,
                               const IntPolynomial& p) {
  return json{{"u", g.word_string(u)},
              {"v", g.word_string(v)},
              {"coefficients", p.coeffs()},
              {"pretty", p.str()}};
}

inline json kl_table_json(const WeylGroup& g, KLTable& kl) {
  json entries = json::array();
  for (uint32_t u = 0; u < g.size(); ++u)
    for (uint32_t v = 0; v < g.size(); ++v)
      if (g.bruhat_leq(WeylElement{u}, WeylElement{v}))
        entries.push_back({{"u", g.word_string(WeylElement{u})},
                           {"v", g.word_string(WeylElement{v})},
                           {"coefficients", kl.kl_polynomial(WeylElement{u}, WeylElement{v}).coeffs()}});
  return json{{"type", g.type().name()}, {"entries", entries}};
}

template <class F>
json spectral_json(const SpectralPoint<F>& z) {
  json zv = json::array();
  for (const F& x : z.zbar) zv.push_back(to_string(x));
  return json{{"zbar", zv}, {"q", to_string(z.q)}};
}

template <class F>
json matrix_triplets_json(const WeylGroup& g, const std::vector<std::vector<F>>& m) {
  json a = json::array();
  for (uint32_t i = 0; i < g.size(); ++i)
    for (uint32_t j = 0; j < g.size(); ++j)
      if (!is_zero(m[i][j]))
        a.push_back({g.word_string(WeylElement{i}), g.word_string(WeylElement{j}), to_string(m[i][j])});
  return a;
}

template <class F>
json matrices_json(const WeylGroup& g, const TransitionMatrices<F>& tm, const std::string& backend,
                   uint64_t seed) {
  json j;
  j["type"] = g.type().name();
  j["backend"] = backend;  // prime as decimal string, or "rational"
  j["seed"] = seed;
  j["point"] = spectral_json(tm.z);
  json order = json::array();
  for (uint32_t i = 0; i < g.size(); ++i) order.push_back(g.word_string(WeylElement{i}));
  j["order"] = order;
  j["M"] = matrix_triplets_json(g, tm.M);
  j["Mtilde"] = matrix_triplets_json(g, tm.Mtilde);
  return j;
}

inline json report_json(const SweepReport& r) {
  json j;
  j["suite"] = r.suite;
  j["type"] = r.type;
  json cfg;
  cfg["primes"] = r.primes;
  cfg["points_per_prime"] = r.points_per_prime;
  cfg["seed"] = r.seed;
  j["config"] = cfg;
  j["config_digest"] = r.config_digest;
  j["counts"] = {{"pairs_total", r.pairs_total},
                 {"pairs_qualifying", r.pairs_qualifying},
                 {"matches", r.matches},
                 {"failures", r.failures.size()}};
  json fails = json::array();
  for (const SweepFailure& f : r.failures)
    fails.push_back({{"u", f.u}, {"v", f.v}, {"detail", f.detail}});
  j["failures"] = fails;
  if (!r.extra.empty()) j["extra"] = r.extra;
  return j;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

inline std::string report_csv(const SweepReport& r) {
  std::string out = "suite,type,pairs_total,pairs_qualifying,matches,failures\n";
  out += r.suite + "," + r.type + "," + std::to_string(r.pairs_total) + "," +
         std::to_string(r.pairs_qualifying) + "," + std::to_string(r.matches) + "," +
         std::to_string(r.failures.size()) + "\n";
  if (!r.failures.empty()) {
    out += "failure_u,failure_v,detail\n";
    for (const SweepFailure& f : r.failures)
      out += csv_escape(f.u) + "," + csv_escape(f.v) + "," + csv_escape(f.detail.dump()) + "\n";
  }
  return out;
}

template <class F>
std::string matrices_csv(const WeylGroup& g, const TransitionMatrices<F>& tm) {
  std::string out = "matrix,u,v,value\n";
  for (uint32_t i = 0; i < g.size(); ++i)
    for (uint32_t j = 0; j < g.size(); ++j)
      if (!is_zero(tm.M[i][j]))
        out += "M," + g.word_string(WeylElement{i}) + "," + g.word_string(WeylElement{j}) + "," +
               csv_escape(to_string(tm.M[i][j])) + "\n";
  for (uint32_t i = 0; i < g.size(); ++i)
    for (uint32_t j = 0; j < g.size(); ++j)
      if (!is_zero(tm.Mtilde[i][j]))
        out += "Mtilde," + g.word_string(WeylElement{i}) + "," + g.word_string(WeylElement{j}) +
               "," + csv_escape(to_string(tm.Mtilde[i][j])) + "\n";
  return out;
}

}  // namespace casselman
