#include "catch2/catch_amalgamated.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "casselman/cli.hpp"

using namespace casselman;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("casselman-test-" + std::to_string(SplitMix64(reinterpret_cast<uintptr_t>(this)).next()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string str() const { return path.string(); }
};

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"casselman"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("parse_element") {
  WeylGroup g = WeylGroup::build("A2");
  CHECK(parse_element("", g) == g.identity());
  CHECK(parse_element("121", g) == g.longest_element());
  CHECK(parse_element("11", g) == g.identity());  // input need not be reduced
  CHECK_THROWS_AS(parse_element("9", g), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("103", g), std::invalid_argument);
}

TEST_CASE("verify conj1 B2 exits 0 with the expected failures") {
  TempDir tmp;
  fs::path out = tmp.path / "rep.json";
  int code = run_cli({"verify", "conj1", "--type", "B2", "--cache-dir", tmp.str(), "--out",
                      out.string()});
  CHECK(code == 0);
  nlohmann::json j = nlohmann::json::parse(slurp(out));
  CHECK(j["counts"]["failures"] == 2);
  CHECK(j["counts"]["pairs_total"] == 33);
  CHECK(j["extra"]["expected_anomalies_matched"] == true);
}

TEST_CASE("verify conj2 B2 exits 1: anomalies beyond the documented set") {
  TempDir tmp;
  fs::path out = tmp.path / "rep.json";
  int code = run_cli({"verify", "conj2", "--type", "B2", "--cache-dir", tmp.str(), "--out",
                      out.string()});
  CHECK(code == 1);
}

TEST_CASE("goodword command emits the word 212") {
  TempDir tmp;
  fs::path out = tmp.path / "gw.json";
  int code = run_cli({"goodword", "--type", "A2", "--u", "1", "--v", "121", "--cache-dir",
                      tmp.str(), "--out", out.string()});
  CHECK(code == 0);
  nlohmann::json j = nlohmann::json::parse(slurp(out));
  CHECK(j["good_word"]["word"] == "212");
  CHECK(j["good_word"]["omitted"] == nlohmann::json::array({1, 3}));
}

TEST_CASE("mmatrix A1 is unitriangular with exact inverse") {
  TempDir tmp;
  fs::path out = tmp.path / "mm.json";
  int code = run_cli({"mmatrix", "--type", "A1", "--prime", "2305843009213693951", "--seed", "7",
                      "--cache-dir", tmp.str(), "--out", out.string()});
  CHECK(code == 0);
  nlohmann::json j = nlohmann::json::parse(slurp(out));
  CHECK(j["order"] == nlohmann::json::array({"", "1"}));
  // triplets (u, v, value): diagonal entries 1, one off-diagonal entry each
  std::map<std::pair<std::string, std::string>, std::string> m, mt;
  for (const auto& t : j["M"]) m[{t[0], t[1]}] = t[2];
  for (const auto& t : j["Mtilde"]) mt[{t[0], t[1]}] = t[2];
  CHECK(m[{"", ""}] == "1");
  CHECK(m[{"1", "1"}] == "1");
  CHECK(m.count({"1", ""}) == 0);
  uint64_t p = 2305843009213693951ULL;
  Fp mv(std::stoull(m[{"", "1"}]), p), mtv(std::stoull(mt[{"", "1"}]), p);
  CHECK(mv + mtv == Fp::zero(p));  // 2x2 unitriangular inverse negates
}

TEST_CASE("mmatrix --rational works on A2") {
  TempDir tmp;
  fs::path out = tmp.path / "mm.json";
  int code = run_cli({"mmatrix", "--type", "A2", "--rational", "--seed", "3", "--cache-dir",
                      tmp.str(), "--out", out.string()});
  CHECK(code == 0);
  nlohmann::json j = nlohmann::json::parse(slurp(out));
  CHECK(j["backend"] == "rational");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli({"verify", "nosuchsuite", "--type", "B2"}) == 2);
  CHECK(run_cli({"group"}) == 2);                            // missing --type
  CHECK(run_cli({"group", "--type", "E8"}) == 2);            // unsupported
  CHECK(run_cli({"nosuchcommand"}) == 2);
  TempDir tmp;
  CHECK(run_cli({"goodword", "--type", "A2", "--u", "9", "--v", "121", "--cache-dir",
                 tmp.str()}) == 2);
}

TEST_CASE("cli output is byte-stable across runs") {
  TempDir tmp;
  fs::path o1 = tmp.path / "a.json", o2 = tmp.path / "b.json";
  run_cli({"verify", "conj1", "--type", "A2", "--cache-dir", tmp.str(), "--out", o1.string()});
  run_cli({"verify", "conj1", "--type", "A2", "--cache-dir", tmp.str(), "--out", o2.string()});
  CHECK(slurp(o1) == slurp(o2));
}

TEST_CASE("csv report format") {
  TempDir tmp;
  fs::path out = tmp.path / "rep.csv";
  int code = run_cli({"verify", "conj1", "--type", "B2", "--format", "csv", "--cache-dir",
                      tmp.str(), "--out", out.string()});
  CHECK(code == 0);
  std::string csv = slurp(out);
  CHECK(csv.rfind("suite,type,", 0) == 0);
  CHECK(csv.find("conj1,B2,33,33,31,2") != std::string::npos);
}

TEST_CASE("cache round trip reproduces the tables") {
  TempDir tmp;
  WeylGroup g = WeylGroup::build("A2");
  KLTable kl(g);
  kl.compute_all();
  cache_store(tmp.path, g, &kl);

  nlohmann::json j;
  {
    std::ifstream in(cache_path(tmp.path, "A2"));
    in >> j;
  }
  CHECK(cache_entry_valid(j, g));
  for (uint32_t v = 0; v < g.size(); ++v)
    CHECK(j["bruhat_rows"][v].get<std::string>() == bruhat_row_hex(g, v));

  KLTable kl2(g);
  CacheLoadResult res = cache_load(tmp.path, g, &kl2);
  CHECK(res.hit);
  CHECK(res.kl_seeded);
  CHECK(kl2.computed_pairs() == 19);
  for (uint32_t u = 0; u < g.size(); ++u)
    for (uint32_t v = 0; v < g.size(); ++v)
      CHECK(kl2.kl_polynomial(WeylElement{u}, WeylElement{v}) ==
            kl.kl_polynomial(WeylElement{u}, WeylElement{v}));
}

TEST_CASE("corrupt or stale cache entries are rejected, never fatal") {
  TempDir tmp;
  WeylGroup g = WeylGroup::build("A2");
  {
    std::ofstream f(cache_path(tmp.path, "A2"));
    f << "this is not json";
  }
  CacheLoadResult res = cache_load(tmp.path, g, nullptr);
  CHECK_FALSE(res.hit);
  CHECK_FALSE(res.warning.empty());

  cache_store(tmp.path, g, nullptr);
  nlohmann::json j;
  {
    std::ifstream in(cache_path(tmp.path, "A2"));
    in >> j;
  }
  j["checksum"] = "0000000000000000";
  {
    std::ofstream f(cache_path(tmp.path, "A2"));
    f << j.dump();
  }
  res = cache_load(tmp.path, g, nullptr);
  CHECK_FALSE(res.hit);
  CHECK_FALSE(res.warning.empty());

  j["checksum"] = detail::hex64(canonical_checksum(g));
  j["schema_version"] = 99;
  {
    std::ofstream f(cache_path(tmp.path, "A2"));
    f << j.dump();
  }
  CHECK_FALSE(cache_load(tmp.path, g, nullptr).hit);

  // the CLI rebuilds and rewrites on top of a corrupt entry
  {
    std::ofstream f(cache_path(tmp.path, "A2"));
    f << "garbage";
  }
  TempDir outdir;
  fs::path out = outdir.path / "g.json";
  CHECK(run_cli({"group", "--type", "A2", "--cache-dir", tmp.str(), "--out", out.string()}) == 0);
  CHECK(cache_load(tmp.path, g, nullptr).hit);
}

TEST_CASE("cold build and warm load agree on D4") {
  TempDir tmp;
  WeylGroup g = WeylGroup::build("D4");
  cache_store(tmp.path, g, nullptr);
  WeylGroup g2 = WeylGroup::build("D4");
  CacheLoadResult res = cache_load(tmp.path, g2, nullptr);
  CHECK(res.hit);  // validation compares every canonical word and bruhat row
  CHECK(canonical_checksum(g) == canonical_checksum(g2));
}

TEST_CASE("cache dir resolution order") {
  CHECK(resolve_cache_dir("/x/y") == fs::path("/x/y"));
  unsetenv("CASSELMAN_CACHE_DIR");
  CHECK(resolve_cache_dir("") == fs::path(".casselman-cache"));
  setenv("CASSELMAN_CACHE_DIR", "/env/dir", 1);
  CHECK(resolve_cache_dir("") == fs::path("/env/dir"));
  unsetenv("CASSELMAN_CACHE_DIR");
}

TEST_CASE("ssets classifies the B2 counterexample pair") {
  TempDir tmp;
  fs::path out = tmp.path / "pc.json";
  int code = run_cli({"ssets", "--type", "B2", "--u", "1", "--v", "121", "--cache-dir", tmp.str(),
                      "--out", out.string()});
  CHECK(code == 0);
  nlohmann::json j = nlohmann::json::parse(slurp(out));
  CHECK(j["deodhar_tight"] == true);
  CHECK(j["good_word"].is_null());
  CHECK(j["kl_dual_one"] == true);
  CHECK(j["S"].size() == 2);
}

TEST_CASE("kl command emits a polynomial and a table") {
  TempDir tmp;
  fs::path out = tmp.path / "kl.json";
  int code = run_cli({"kl", "--type", "A3", "--u", "2", "--v", "2132", "--cache-dir", tmp.str(),
                      "--out", out.string()});
  CHECK(code == 0);
  nlohmann::json j = nlohmann::json::parse(slurp(out));
  CHECK(j["coefficients"] == nlohmann::json::array({1, 1}));
  CHECK(j["pretty"] == "q + 1");

  fs::path out2 = tmp.path / "table.json";
  code = run_cli({"kl", "--type", "A2", "--cache-dir", tmp.str(), "--out", out2.string()});
  CHECK(code == 0);
  nlohmann::json t = nlohmann::json::parse(slurp(out2));
  CHECK(t["entries"].size() == 19);
}
