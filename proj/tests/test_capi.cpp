#include "cotorkit/cotorkit.h"
#include "doctest.h"
#include "json.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

const std::string kFixtures = COTORKIT_FIXTURE_DIR;

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

std::string temp_file(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p.string();
}

cotorkit_module* load(const std::string& path) {
  cotorkit_module* m = nullptr;
  REQUIRE(cotorkit_module_load(path.c_str(), &m) == COTORKIT_OK);
  return m;
}

std::string take(char* s) {
  std::string out = s;
  cotorkit_free_string(s);
  return out;
}

const char* kA2 = R"({"field": {"kind": "Q"},
 "presentation": {"kind": "quiver", "vertices": ["e1", "e2"],
   "arrows": [{"name": "a", "source": "e1", "target": "e2"}], "relations": []}})";

}  // namespace

TEST_CASE("status names and null arguments") {
  CHECK(std::string(cotorkit_status_name(COTORKIT_OK)) == "Ok");
  CHECK(std::string(cotorkit_status_name(COTORKIT_PARSE_ERROR)) == "ParseError");
  CHECK(std::string(cotorkit_status_name(COTORKIT_HOMOTHETY_NOT_ISO)) == "HomothetyNotIso");
  CHECK(std::string(cotorkit_status_name(COTORKIT_OUT_OF_MEMORY)) == "OutOfMemory");
  cotorkit_module* m = nullptr;
  CHECK(cotorkit_module_load(nullptr, &m) == COTORKIT_INVALID_ARGUMENT);
  CHECK(std::string(cotorkit_last_error()).size() > 0);
  CHECK(cotorkit_module_dim(nullptr) == 0);
  cotorkit_module_free(nullptr);
}

TEST_CASE("load errors report codes and messages") {
  cotorkit_module* m = nullptr;
  CHECK(cotorkit_module_load("/nonexistent/x.json", &m) == COTORKIT_PARSE_ERROR);
  CHECK(m == nullptr);
  std::string bad = temp_file("capi_bad.module.json",
                              R"({"algebra": ")" + fixture("F2.algebra.json") +
                                  R"(", "side": "left", "dim": 2, "action": {"alpha": [["1", "0"], ["0", "0"]], "beta": [["0", "0"], ["0", "0"]]}})");
  cotorkit_status s = cotorkit_module_load(bad.c_str(), &m);
  CHECK(s != COTORKIT_OK);
  CHECK(s != COTORKIT_PARSE_ERROR);
  CHECK(std::string(cotorkit_last_error()).find("alpha") != std::string::npos);
  cotorkit_algebra* a = nullptr;
  REQUIRE(cotorkit_algebra_load(fixture("F3.algebra.json").c_str(), &a) == COTORKIT_OK);
  char* out = nullptr;
  REQUIRE(cotorkit_algebra_describe(a, COTORKIT_JSON, &out) == COTORKIT_OK);
  auto j = nlohmann::json::parse(take(out));
  CHECK(j["dim"] == 8);
  CHECK(j["commutative"] == true);
  CHECK(std::string(cotorkit_last_error()).empty());
  cotorkit_algebra_free(a);
}

TEST_CASE("ext and tor through handles") {
  cotorkit_module* g = load(fixture("ImGstar.module.json"));
  cotorkit_module* reg = load(fixture("F3.regular.module.json"));
  std::size_t d = 0;
  REQUIRE(cotorkit_ext_dim(g, reg, 1, &d) == COTORKIT_OK);
  CHECK(d == 3);
  cotorkit_module* s1 = load(fixture("S1.module.json"));
  // k[x]/x^2: Ext^i(k, k) = Tor_i(k, k) = k in every degree
  for (std::size_t i = 0; i <= 3; ++i) {
    REQUIRE(cotorkit_ext_dim(s1, s1, i, &d) == COTORKIT_OK);
    CHECK(d == 1);
    REQUIRE(cotorkit_tor_dim(s1, s1, i, &d) == COTORKIT_OK);
    CHECK(d == 1);
  }
  CHECK(cotorkit_ext_dim(s1, g, 0, &d) == COTORKIT_ALGEBRA_MISMATCH);
  cotorkit_module_free(g);
  cotorkit_module_free(reg);
  cotorkit_module_free(s1);
}

TEST_CASE("transpose output reloads") {
  cotorkit_module* s2 = load(fixture("S2.module.json"));
  cotorkit_context* c = nullptr;
  REQUIRE(cotorkit_context_create(s2, "matlis", 6, &c) == COTORKIT_OK);
  cotorkit_module* t = nullptr;
  REQUIRE(cotorkit_transpose(s2, c, &t) == COTORKIT_OK);
  CHECK(std::string(cotorkit_module_id(t)) == "Tr(" + fixture("S2.module.json") + ")");
  char* out = nullptr;
  REQUIRE(cotorkit_module_to_json(t, &out) == COTORKIT_OK);
  std::string text = take(out);
  CHECK(nlohmann::json::parse(text)["side"] == "right");
  cotorkit_module* back = load(temp_file("capi_tr.module.json", text));
  CHECK(cotorkit_module_dim(back) == cotorkit_module_dim(t));
  // a right module has no left context
  cotorkit_context* c2 = nullptr;
  CHECK(cotorkit_context_create(back, "matlis", 6, &c2) == COTORKIT_SIDE_MISMATCH);

  cotorkit_module* ct = nullptr;
  REQUIRE(cotorkit_cotranspose(s2, c, &ct) == COTORKIT_OK);
  CHECK(cotorkit_module_dim(ct) > 0);
  for (auto* m : {s2, t, back, ct}) cotorkit_module_free(m);
  cotorkit_context_free(c);
}

TEST_CASE("context specs") {
  cotorkit_module* s2 = load(fixture("S2.module.json"));
  cotorkit_context* c = nullptr;
  CHECK(cotorkit_context_create(s2, fixture("S2.bimodule.json").c_str(), 6, &c) == COTORKIT_HOMOTHETY_NOT_ISO);
  REQUIRE(cotorkit_context_create(s2, fixture("F2.matlis.bimodule.json").c_str(), 6, &c) == COTORKIT_OK);
  char* out = nullptr;
  REQUIRE(cotorkit_invariants(s2, c, 6, COTORKIT_JSON, &out) == COTORKIT_OK);
  auto j = nlohmann::json::parse(take(out));
  CHECK(j["context"]["C"] == fixture("F2.matlis.bimodule.json"));
  cotorkit_context_free(c);

  REQUIRE(cotorkit_context_create(s2, "matlis", 6, &c) == COTORKIT_OK);
  REQUIRE(cotorkit_invariants(s2, c, 6, COTORKIT_JSON, &out) == COTORKIT_OK);
  auto m = nlohmann::json::parse(take(out));
  CHECK(m["profile"] == j["profile"]);
  cotorkit_context_free(c);

  std::string alg = temp_file("capi_a2.algebra.json", kA2);
  std::string mod = temp_file("capi_a2_s1.module.json", R"({"algebra": ")" + alg +
                                                             R"(", "side": "left", "dim": 1, "action": {"e1": [["1"]], "e2": [["0"]], "a": [["0"]]}})");
  cotorkit_module* s = load(mod);
  CHECK(cotorkit_context_create(s, "regular", 6, &c) == COTORKIT_VALIDATION_ERROR);
  REQUIRE(cotorkit_context_create(s, "matlis", 6, &c) == COTORKIT_OK);
  cotorkit_context_free(c);
  cotorkit_module_free(s);
  cotorkit_module_free(s2);
}

TEST_CASE("approximation and its precondition") {
  cotorkit_module* m = load(fixture("ImF9dual.module.json"));
  cotorkit_context* c = nullptr;
  REQUIRE(cotorkit_context_create(m, "matlis", 6, &c) == COTORKIT_OK);
  char* out = nullptr;
  int verified = 0;
  REQUIRE(cotorkit_approx(m, c, 2, 0, COTORKIT_JSON, &out, &verified) == COTORKIT_OK);
  CHECK(verified == 1);
  auto j = nlohmann::json::parse(take(out));
  CHECK(j["verified"]["ok"] == true);
  CHECK(j["y_coresolution_length"].get<std::size_t>() <= 1);
  CHECK(j["dims"]["X"].get<std::size_t>() == j["dims"]["M"].get<std::size_t>() + j["dims"]["Y"].get<std::size_t>());
  cotorkit_context_free(c);
  cotorkit_module_free(m);

  // over the two-loop algebra coOmega^2(S2) is not 2-cotorsionfree for C = D(A)
  cotorkit_module* s2 = load(fixture("S2.module.json"));
  REQUIRE(cotorkit_context_create(s2, "matlis", 6, &c) == COTORKIT_OK);
  out = nullptr;
  CHECK(cotorkit_approx(s2, c, 2, 0, COTORKIT_TEXT, &out, &verified) == COTORKIT_PRECONDITION_FAILED);
  CHECK(out == nullptr);
  CHECK(std::string(cotorkit_last_error()).find("Tor_2") != std::string::npos);
  REQUIRE(cotorkit_approx(s2, c, 1, 0, COTORKIT_TEXT, &out, &verified) == COTORKIT_OK);
  CHECK(verified == 1);
  cotorkit_free_string(out);
  cotorkit_context_free(c);
  cotorkit_module_free(s2);
}

TEST_CASE("verify through the C API") {
  char* out = nullptr;
  std::size_t failures = 7;
  REQUIRE(cotorkit_verify(R"({"seed": 3, "count": 4, "checks": ["prop_2_3", "prop_3_2"]})", COTORKIT_JSON, &out,
                          &failures) == COTORKIT_OK);
  CHECK(failures == 0);
  std::string first = take(out);
  REQUIRE(cotorkit_verify(R"({"checks": ["prop_3_2", "prop_2_3"], "count": 4, "seed": 3})", COTORKIT_JSON, &out,
                          &failures) == COTORKIT_OK);
  auto a = nlohmann::json::parse(first), b = nlohmann::json::parse(take(out));
  // results follow the configured check order; the set is the same
  auto sorted = [](const nlohmann::json& r) {
    std::vector<std::string> v;
    for (const auto& x : r) v.push_back(x.dump());
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(a["results"]) == sorted(b["results"]));
  CHECK(a["summary"] == b["summary"]);
  CHECK(cotorkit_verify(R"({"checks": ["nope"]})", COTORKIT_JSON, &out, &failures) == COTORKIT_UNKNOWN_CHECK);
  CHECK(cotorkit_verify(R"({"sead": 1})", COTORKIT_JSON, &out, &failures) == COTORKIT_PARSE_ERROR);
  CHECK(cotorkit_verify("{", COTORKIT_JSON, &out, &failures) == COTORKIT_PARSE_ERROR);
  CHECK(cotorkit_verify(R"({"seed": 1, "count": 2, "corrupt": true, "checks": ["prop_2_3"]})", COTORKIT_TEXT, &out,
                        &failures) == COTORKIT_OK);
  cotorkit_free_string(out);
}

TEST_CASE("canonical json") {
  char* out = nullptr;
  REQUIRE(cotorkit_canonical_json(R"({"b": 1, "a": ["x", "y"]})", &out) == COTORKIT_OK);
  CHECK(take(out) == "{\n  \"a\": [\"x\", \"y\"],\n  \"b\": 1\n}\n");
  CHECK(cotorkit_canonical_json("[", &out) == COTORKIT_PARSE_ERROR);
}

TEST_CASE("right module over an inline algebra outlives the loader") {
  std::string body = std::string(R"({"algebra": )") + kA2 +
                     R"(, "side": "right", "dim": 1, "action": {"e1": [["0"]], "e2": [["1"]], "a": [["0"]]}})";
  cotorkit_module* m = load(temp_file("capi_inline_right.module.json", body));
  char* out = nullptr;
  REQUIRE(cotorkit_module_describe(m, COTORKIT_JSON, &out) == COTORKIT_OK);
  CHECK(nlohmann::json::parse(take(out))["side"] == "right");
  REQUIRE(cotorkit_module_to_json(m, &out) == COTORKIT_OK);
  CHECK(nlohmann::json::parse(take(out))["algebra"]["presentation"]["kind"] == "quiver");
  cotorkit_module_free(m);
}
