#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "casselman/kl.hpp"
#include "casselman/verify.hpp"
#include "casselman/weyl.hpp"

#include "json.hpp"

namespace casselman {

/*
  Versioned JSON cache of group tables (canonical words, lengths, Bruhat bit
  matrix as hex rows, reflection map) plus the optional KL table.  A
  checksum over the canonical element list guards against convention drift;
  stale versions and corrupt files are ignored and rebuilt, never fatal.
  Loaded group tables are cross-checked against a fresh deterministic build
  before anything is trusted, so the cache can only ever accelerate the KL
  table, not poison results.  Writes are atomic (temp file + rename).
*/

constexpr int kCacheSchemaVersion = 1;

inline std::filesystem::path resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("CASSELMAN_CACHE_DIR"); env && *env) return env;
  return ".casselman-cache";
}

inline std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& type) {
  return dir / (type + ".json");
}

inline uint64_t canonical_checksum(const WeylGroup& g) {
  std::string blob = g.type().name();
  for (uint32_t i = 0; i < g.size(); ++i) {
    blob += '|';
    blob += g.word_string(WeylElement{i});
  }
  return detail::fnv1a(blob);
}

inline std::string bruhat_row_hex(const WeylGroup& g, uint32_t v) {
  static const char* hexd = "0123456789abcdef";
  uint32_t n = g.size();
  std::string row((n + 3) / 4, '0');
  for (uint32_t u = 0; u < n; ++u) {
    if (g.bruhat_leq(WeylElement{u}, WeylElement{v})) {
      size_t nib = u / 4;
      int bit = u % 4;
      int cur = row[nib] <= '9' ? row[nib] - '0' : row[nib] - 'a' + 10;
      row[nib] = hexd[cur | (1 << bit)];
    }
  }
  return row;
}

inline nlohmann::json cache_entry_json(const WeylGroup& g, KLTable* kl) {
  nlohmann::json j;
  j["schema_version"] = kCacheSchemaVersion;
  j["type"] = g.type().name();
  j["order"] = g.size();
  j["checksum"] = detail::hex64(canonical_checksum(g));
  nlohmann::json words = nlohmann::json::array();
  nlohmann::json lengths = nlohmann::json::array();
  for (uint32_t i = 0; i < g.size(); ++i) {
    words.push_back(g.word_string(WeylElement{i}));
    lengths.push_back(g.length(WeylElement{i}));
  }
  j["words"] = words;
  j["lengths"] = lengths;
  nlohmann::json rows = nlohmann::json::array();
  for (uint32_t v = 0; v < g.size(); ++v) rows.push_back(bruhat_row_hex(g, v));
  j["bruhat_rows"] = rows;
  nlohmann::json refl = nlohmann::json::array();
  for (int a = 0; a < g.roots().positive_count(); ++a)
    refl.push_back(g.word_string(g.reflection(a)));
  j["reflections"] = refl;
  if (kl) {
    nlohmann::json entries = nlohmann::json::array();
    for (uint32_t u = 0; u < g.size(); ++u)
      for (uint32_t v = 0; v < g.size(); ++v)
        if (g.bruhat_leq(WeylElement{u}, WeylElement{v}))
          entries.push_back({g.word_string(WeylElement{u}), g.word_string(WeylElement{v}),
                             kl->kl_polynomial(WeylElement{u}, WeylElement{v}).coeffs()});
    j["kl_checksum"] = detail::hex64(detail::fnv1a(entries.dump()));
    j["kl"] = entries;
  }
  return j;
}

inline void cache_store(const std::filesystem::path& dir, const WeylGroup& g, KLTable* kl) {
  std::filesystem::create_directories(dir);
  std::filesystem::path target = cache_path(dir, g.type().name());
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << cache_entry_json(g, kl).dump(1) << "\n";
  }
  std::filesystem::rename(tmp, target);
}

/// Validate a cache entry against a freshly built group; any mismatch means
/// the entry is stale or corrupt.
inline bool cache_entry_valid(const nlohmann::json& j, const WeylGroup& g) {
  try {
    if (j.at("schema_version").get<int>() != kCacheSchemaVersion) return false;
    if (j.at("type").get<std::string>() != g.type().name()) return false;
    if (j.at("order").get<uint32_t>() != g.size()) return false;
    if (j.at("checksum").get<std::string>() != detail::hex64(canonical_checksum(g))) return false;
    const auto& words = j.at("words");
    const auto& lengths = j.at("lengths");
    const auto& rows = j.at("bruhat_rows");
    const auto& refl = j.at("reflections");
    if (words.size() != g.size() || lengths.size() != g.size() || rows.size() != g.size())
      return false;
    if (refl.size() != static_cast<size_t>(g.roots().positive_count())) return false;
    for (uint32_t i = 0; i < g.size(); ++i) {
      WeylElement w{i};
      if (words[i].get<std::string>() != g.word_string(w)) return false;
      if (lengths[i].get<int>() != g.length(w)) return false;
      if (rows[i].get<std::string>() != bruhat_row_hex(g, i)) return false;
    }
    for (int a = 0; a < g.roots().positive_count(); ++a)
      if (refl[a].get<std::string>() != g.word_string(g.reflection(a))) return false;
    if (j.contains("kl")) {
      if (!j.contains("kl_checksum")) return false;
      if (j.at("kl_checksum").get<std::string>() != detail::hex64(detail::fnv1a(j.at("kl").dump())))
        return false;
    }
    return true;
  } catch (const nlohmann::json::exception&) {
    return false;
  }
}

struct CacheLoadResult {
  bool hit = false;        // a valid entry was found and adopted
  bool kl_seeded = false;  // the KL table came from the cache
  std::string warning;     // set when a file existed but was rejected
};

/// Read and validate the entry for g's type; on success seed kl (when given
/// and present).  Rejected files are reported in `warning`, never thrown.
inline CacheLoadResult cache_load(const std::filesystem::path& dir, const WeylGroup& g,
                                  KLTable* kl) {
  CacheLoadResult res;
  std::filesystem::path file = cache_path(dir, g.type().name());
  std::error_code ec;
  if (!std::filesystem::exists(file, ec)) return res;
  nlohmann::json j;
  try {
    std::ifstream in(file);
    in >> j;
  } catch (const std::exception& e) {
    res.warning = "cache: unreadable " + file.string() + " (" + e.what() + "), rebuilding";
    return res;
  }
  if (!cache_entry_valid(j, g)) {
    res.warning = "cache: stale or corrupt " + file.string() + ", rebuilding";
    return res;
  }
  res.hit = true;
  if (kl && j.contains("kl")) {
    for (const auto& e : j.at("kl")) {
      Word uw, vw;
      for (char c : e[0].get<std::string>()) uw.push_back(static_cast<uint8_t>(c - '1'));
      for (char c : e[1].get<std::string>()) vw.push_back(static_cast<uint8_t>(c - '1'));
      kl->seed(g.element_from_word(uw), g.element_from_word(vw),
               IntPolynomial(e[2].get<std::vector<long long>>()));
    }
    res.kl_seeded = true;
  }
  return res;
}

}  // namespace casselman
