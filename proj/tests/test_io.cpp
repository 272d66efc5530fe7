#include "cotorkit/io.hpp"
#include "doctest.h"
#include "test_support.hpp"

#include <filesystem>
#include <fstream>

using namespace cotorkit;
using namespace cotorkit::fixtures;
using namespace testing_support;

namespace {

const std::string kFixtures = COTORKIT_FIXTURE_DIR;

bool iso(const ModulePtr& a, const ModulePtr& b) {
  std::mt19937_64 rng(9);
  return iso_test(a, b, rng).verdict == IsoVerdict::Isomorphic;
}

std::string temp_file(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST_CASE("algebra round trip") {
  for (const auto& a : {F1(), F2(), F3()}) {
    Json j = algebra_to_json(*a);
    AlgebraPtr b = algebra_from_json(j);
    CHECK(b->same_table(*a));
    CHECK(dump_canonical(algebra_to_json(*b)) == dump_canonical(j));
  }
  TablePresentation t;
  t.dim = 2;
  t.mul = {{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}, {{Rational(0), Rational(1)}, {Rational(0), Rational(0)}}};
  t.one = {Rational(1), Rational(0)};
  AlgebraPtr tab = build_table_algebra(t, Q);
  AlgebraPtr back = algebra_from_json(algebra_to_json(*tab));
  CHECK(back->same_table(*tab));
}

TEST_CASE("module round trip") {
  std::mt19937_64 rng(2);
  std::vector<ModulePtr> ms = {S1(), S2(), ImGstar(), random_rad2_module(F2(), 2, 2, rng), matlis_dual(S2())};
  for (const auto& m : ms) {
    Json j = module_to_json(*m);
    ModulePtr back = module_from_json(j, m->algebra());
    CHECK(back->side() == m->side());
    for (std::size_t i = 0; i < m->actions().size(); ++i) CHECK(back->action(i) == m->action(i));
    CHECK(dump_canonical(module_to_json(*back)) == dump_canonical(j));
  }
}

TEST_CASE("fixture files match the built-in fixtures") {
  auto f2 = load_algebra(kFixtures + "/F2.algebra.json");
  CHECK(f2->same_table(*F2()));
  CHECK(load_algebra(kFixtures + "/F2.algebra.json").get() == f2.get());
  auto s2 = load_module(kFixtures + "/S2.module.json");
  CHECK(s2.algebra.get() == f2.get());
  CHECK(s2.module->dim() == 1);
  auto g = load_module(kFixtures + "/ImGstar.module.json");
  CHECK(iso(g.module, as_left(ImGstar(), g.algebra)));
  auto reg = load_module(kFixtures + "/F3.regular.module.json");
  CHECK(ext_dim(g.module, reg.module, 1) == 3);
  auto c = load_bimodule(kFixtures + "/F2.matlis.bimodule.json");
  CHECK(c.left_algebra().get() == f2.get());
  CHECK(c.dim() == 3);
}

TEST_CASE("parse errors carry context") {
  Json bad = algebra_to_json(*F1());
  bad["presentation"]["relations"][0][0]["coeff"] = "1/0";
  try {
    algebra_from_json(bad, "F1.algebra.json");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find("relations[0][0].coeff") != std::string::npos);
    CHECK(std::string(e.what()).find("1/0") != std::string::npos);
  }
  bad = algebra_to_json(*F1());
  bad["presentation"]["relations"][0][0]["coeff"] = 1;
  CHECK_THROWS_AS(algebra_from_json(bad), Error);

  std::string path = temp_file("cotorkit_bad.json", "{\n  \"field\": {\"kind\": \"Q\"},\n  \"presentation\": [\n}\n");
  try {
    read_json_file(path);
    FAIL("expected a syntax error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find(":4:") != std::string::npos);
  }
}

TEST_CASE("module violating a relation is rejected") {
  auto mat = [](std::vector<std::vector<std::string>> rows) {
    Json a = Json::array();
    for (const auto& r : rows) a.push_back(r);
    return a;
  };
  Json j{{"side", "left"}, {"dim", 2}, {"action", {{"alpha", mat({{"0", "0"}, {"1", "0"}})}, {"beta", mat({{"0", "0"}, {"0", "0"}})}}}};
  CHECK_NOTHROW(module_from_json(j, F2()));
  j["action"]["alpha"] = mat({{"1", "0"}, {"0", "0"}});
  try {
    module_from_json(j, F2(), "bad.module.json");
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.code() != ErrorCode::Parse);
    CHECK(std::string(e.what()).find("bad.module.json") != std::string::npos);
  }
  j["action"]["gamma"] = j["action"]["beta"];
  CHECK_THROWS_AS(module_from_json(j, F2()), Error);
}

TEST_CASE("canonical output is stable") {
  Json j{{"b", 1}, {"a", {{"z", Json::array({"1", "2"})}, {"y", nullptr}}}};
  std::string s = dump_canonical(j);
  CHECK(s == dump_canonical(parse_json(s, "x")));
  CHECK(s.find("\"a\"") < s.find("\"b\""));
  CHECK(s.find("[\"1\", \"2\"]") != std::string::npos);
  auto r = min_resolution(S2(), ResolutionSide::Projective, 2);
  Json rj = resolution_to_json(r, true);
  CHECK(rj["multiplicities"] == Json::array({1, 2, 4}));
}

TEST_CASE("invariant reports") {
  auto ctx = matlis_context(F1(), 6);
  auto r = invariant_report(im_f9_dual(), *ctx, 6, "ImF9dual.module.json", "matlis");
  Json j = invariant_report_to_json(r);
  CHECK(j["gorenstein_injective_upto"] == 6);
  CHECK(j["context"]["C"] == "matlis");
  CHECK(j["context"]["bound"] == 6);
  CHECK(j["profile"]["cotorsionfree_through"] == 6);
  CHECK(j["injective"] == false);
  CHECK(j["theta"]["iso"] == true);
  CHECK(dump_canonical(j) == dump_canonical(invariant_report_to_json(r)));
  std::string text = invariant_report_text(r);
  CHECK(text.find("Gorenstein injective up to bound 6: yes") != std::string::npos);
  CHECK(text.find("(bound 6)") != std::string::npos);

  auto s = invariant_report(S2(), *matlis_context(F2(), 6), 6, "S2", "matlis");
  CHECK(invariant_report_to_json(s)["gorenstein_injective_upto"] == false);
  auto reg = invariant_report(S1(), *regular_context(F1(), 6), 6, "S1", "regular");
  CHECK(invariant_report_to_json(reg)["bass"]["in_class"] == true);
}
