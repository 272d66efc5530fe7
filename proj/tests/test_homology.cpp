#include "cotorkit/homology.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cotorkit;
using namespace cotorkit::fixtures;
using namespace testing_support;

namespace {

AlgebraPtr a2_path() {
  QuiverPresentation q;
  q.vertices = {"1", "2"};
  q.arrows = {{"a", "1", "2"}};
  return build_graded_quotient(q, Q);
}

}  // namespace

TEST_CASE("projective cover and injective envelope") {
  auto pc = projective_cover(S1());
  CHECK(pc.p->dim() == 2);
  CHECK(pc.epi.is_surjective());
  pc.epi.validate();
  auto env = injective_envelope(S2());
  CHECK(env.i->dim() == 3);
  CHECK(env.mono.is_injective());
  env.mono.validate();
  auto reg = structural_modules(F2()).regular;
  std::mt19937_64 rng(5);
  CHECK(iso_test(env.i, matlis_dual(std::make_shared<Module>(reg->reinterpret(F2()->opposite(), Side::Right))), rng)
            .verdict == IsoVerdict::Isomorphic);
}

TEST_CASE("minimal resolutions verify") {
  auto r = min_resolution(S1(), ResolutionSide::Projective, 5);
  CHECK(verify_resolution(r).ok());
  CHECK(r.multiplicities() == std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
  auto r2 = min_resolution(S2(), ResolutionSide::Projective, 4);
  CHECK(verify_resolution(r2).ok());
  CHECK(r2.multiplicities() == std::vector<std::size_t>{1, 2, 4, 8, 16});
  auto inj = min_resolution(S2(), ResolutionSide::Injective, 3);
  auto chk = verify_resolution(inj);
  CHECK_MESSAGE(chk.ok(), chk.detail);
  CHECK(cosyzygy_of(inj, 1).module->dim() == 2);
  CHECK(cosyzygy(S2(), 1)->dim() == 2);
  for (std::size_t i = 0; i <= 3; ++i) r.map(std::min<std::size_t>(i, 4)).validate();
  inj.map(1).validate();
  inj.augmentation_hom().validate();

  auto g = ImGstar();
  auto rg = min_resolution(g, ResolutionSide::Projective, 3);
  auto cg = verify_resolution(rg);
  CHECK_MESSAGE(cg.ok(), cg.detail);
  auto ig = min_resolution(g, ResolutionSide::Injective, 2);
  auto cig = verify_resolution(ig);
  CHECK_MESSAGE(cig.ok(), cig.detail);
}

TEST_CASE("extend resolution matches a direct computation") {
  auto r = min_resolution(S2(), ResolutionSide::Projective, 1);
  extend_resolution(r, 3);
  auto s = min_resolution(S2(), ResolutionSide::Projective, 3);
  CHECK(r.multiplicities() == s.multiplicities());
  CHECK(verify_resolution(r).ok());
  auto inj = min_resolution(ImGstar(), ResolutionSide::Injective, 0);
  extend_resolution(inj, 2);
  CHECK(verify_resolution(inj).ok());
}

TEST_CASE("worked Ext and Tor values") {
  auto r = min_resolution(S1(), ResolutionSide::Projective, 6);
  CHECK(ext_dims(r, S1(), 0, 5) == std::vector<std::size_t>(6, 1));
  auto right_s1 = matlis_dual(S1());
  CHECK(tor_dims(right_s1, r, 0, 5) == std::vector<std::size_t>(6, 1));
  CHECK(ext_dim(ImGstar(), structural_modules(F3()).regular, 1) == 3);
}

TEST_CASE("Ext agrees with the dimension-shifting oracle") {
  std::mt19937_64 rng(11);
  std::vector<ModulePtr> ms = {S1(), S2(), ImGstar(), coker_f10(), im_f9_dual()};
  for (int k = 0; k < 4; ++k) ms.push_back(random_rad2_module(F2(), 1 + k % 2, 1 + k % 3, rng));
  for (int k = 0; k < 3; ++k) ms.push_back(random_rad2_module(F3(), 1 + k % 2, 2, rng, true, 1));
  for (const auto& m : ms) {
    std::vector<ModulePtr> ns;
    for (const auto& n : ms)
      if (same_category(*m, *n)) ns.push_back(n);
    auto r = min_resolution(m, ResolutionSide::Projective, 3);
    for (const auto& n : ns) {
      auto e = ext_dims(r, n, 0, 2);
      for (std::size_t i = 0; i <= 2; ++i) CHECK(e[i] == ext_oracle(m, n, i));
    }
  }
}

TEST_CASE("Tor agrees with the dimension-shifting oracle") {
  std::mt19937_64 rng(13);
  std::vector<ModulePtr> ms = {S2(), random_rad2_module(F2(), 2, 1, rng), random_rad2_module(F2(), 1, 2, rng)};
  for (const auto& n : ms) {
    auto r = min_resolution(n, ResolutionSide::Projective, 3);
    for (const auto& x : ms) {
      auto xr = matlis_dual(x);
      auto t = tor_dims(xr, r, 0, 2);
      for (std::size_t i = 0; i <= 2; ++i) CHECK(t[i] == tor_oracle(xr, n, i));
    }
  }
}

TEST_CASE("balance and padded resolutions") {
  std::mt19937_64 rng(17);
  std::vector<std::pair<ModulePtr, ModulePtr>> pairs = {
      {S2(), S2()}, {ImGstar(), structural_modules(F3()).regular}, {S1(), im_f9_dual()}};
  pairs.emplace_back(random_rad2_module(F2(), 2, 1, rng), random_rad2_module(F2(), 1, 1, rng));
  for (const auto& [m, n] : pairs) {
    auto p = min_resolution(m, ResolutionSide::Projective, 3);
    auto inj = min_resolution(n, ResolutionSide::Injective, 3);
    auto e = ext_dims(p, n, 0, 2);
    for (std::size_t i = 0; i <= 2; ++i) {
      if (i < 2 || n->dim() < 8) CHECK(ext_dim_injective(m, inj, i) == e[i]);
      CHECK(ext_dim_generic(p, n, i) == e[i]);
    }
    auto padded = pad_resolution(p, 1, 0);
    CHECK(!verify_resolution(padded).minimal);
    CHECK(verify_resolution(padded).complex);
    CHECK(verify_resolution(padded).exact);
    for (std::size_t i = 0; i <= 2; ++i) CHECK(ext_dim_generic(padded, n, i) == e[i]);
    auto padded0 = pad_resolution(p, 0, 0);
    CHECK(verify_resolution(padded0).exact);
    CHECK(ext_dim_generic(padded0, n, 1) == e[1]);
  }
}

TEST_CASE("balanced Ext and Tor pick either side") {
  std::mt19937_64 rng(19);
  std::vector<ModulePtr> ms = {S2(), structural_modules(F2()).regular, random_rad2_module(F2(), 2, 1, rng),
                               random_rad2_module(F2(), 1, 2, rng)};
  auto dl = matlis_bimodule(F2()).left_module();
  ms.push_back(dl);
  for (const auto& m : ms)
    for (const auto& n : ms) {
      CHECK(ext_dims_balanced(m, n, 0, 3) == ext_dims(min_resolution(m, ResolutionSide::Projective, 4), n, 0, 3));
      auto x = matlis_dual(m);
      CHECK(tor_dims_balanced(x, n, 0, 3) == tor_dims(x, min_resolution(n, ResolutionSide::Projective, 4), 0, 3));
    }
  auto reg3 = structural_modules(F3()).regular;
  CHECK(ext_dims_balanced(ImGstar(), reg3, 1, 1)[0] == 3);
  CHECK(ext_dims_balanced(reg3, reg3, 1, 6) == std::vector<std::size_t>(6, 0));
}

TEST_CASE("Tor module structure") {
  auto c = matlis_bimodule(F2());
  auto r = min_resolution(S2(), ResolutionSide::Projective, 3);
  auto dims = tor_dims(c.right_module(), r, 0, 2);
  for (std::size_t i = 0; i <= 2; ++i) {
    auto t = tor_module(c, r, i);
    t->validate();
    CHECK(t->dim() == dims[i]);
  }
  for (std::size_t i = 0; i <= 2; ++i) CHECK(dims[i] == tor_oracle(c.right_module(), S2(), i));
  CHECK(dims[0] == hom_dim(S2(), structural_modules(F2()).regular));
  auto inj = structural_modules(F2()).regular;
  auto dinj = matlis_dual(std::make_shared<Module>(inj->reinterpret(F2()->opposite(), Side::Right)));
  auto reg = regular_bimodule(F2());
  auto ri = min_resolution(dinj, ResolutionSide::Projective, 4);
  CHECK(tor_dims(reg.right_module(), ri, 1, 3) == std::vector<std::size_t>{0, 0, 0});
}

TEST_CASE("hereditary path algebra") {
  auto a = a2_path();
  auto s = structural_modules(a);
  for (const auto& m : s.simples) {
    auto r = min_resolution(m, ResolutionSide::Projective, 4);
    CHECK(verify_resolution(r).ok());
    CHECK(r.zero_from.has_value());
    CHECK(*r.zero_from <= 2);
    for (const auto& n : s.simples) CHECK(ext_dims(r, n, 2, 3) == std::vector<std::size_t>{0, 0});
  }
  std::size_t e = ext_dim(s.simples[0], s.simples[1], 1) + ext_dim(s.simples[1], s.simples[0], 1);
  CHECK(e == 1);
  CHECK(ext_dim(s.simples[0], s.simples[1], 1) == ext_oracle(s.simples[0], s.simples[1], 1));
  CHECK(ext_dim(s.simples[1], s.simples[0], 1) == ext_oracle(s.simples[1], s.simples[0], 1));
}

TEST_CASE("pullbacks, pushouts and exactness") {
  auto pc = projective_cover(S2());
  auto pb = pullback(pc.epi, pc.epi);
  CHECK(pb.p->dim() == 2 * 3 - 1);
  pb.to_x.validate();
  CHECK(compose(pc.epi, pb.to_x).matrix == compose(pc.epi, pb.to_y).matrix);
  auto env = injective_envelope(S2());
  auto po = pushout(env.mono, env.mono);
  CHECK(po.q->dim() == 2 * 3 - 1);
  CHECK(compose(po.from_x, env.mono).matrix == compose(po.from_y, env.mono).matrix);

  auto r = min_resolution(S1(), ResolutionSide::Projective, 2);
  Complex c{{r.term(1), r.term(0), S1()}, {r.map(0), r.augmentation_hom()}};
  CHECK(is_complex(c));
  CHECK(is_exact_at(c, 1).exact);
  CHECK(!is_exact_at(c, 0).exact);
  CHECK(is_exact_at(c, 0).defect == 1);
  CHECK(is_exact_at(c, 2).exact);
}
