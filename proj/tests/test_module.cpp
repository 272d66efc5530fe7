#include "doctest.h"
#include "test_support.hpp"

using namespace cotorkit;
using namespace cotorkit::fixtures;

using namespace testing_support;

TEST_CASE("make_module") {
  CHECK(S1()->dim() == 1);
  S1()->validate();
  S2()->validate();
  try {
    make_module(F1(), Side::Left, 1, {{"x", Matrix::from_ints(Q, {{1}})}});
    FAIL("expected RelationViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RelationViolated);
  }
  try {
    make_module(F2(), Side::Left, 2,
                {{"alpha", Matrix::from_ints(Q, {{0, 0}, {1, 0}})}, {"beta", Matrix::from_ints(Q, {{0, 1}, {0, 0}})}});
    FAIL("expected RelationViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RelationViolated);
  }
  QuiverPresentation q;
  q.vertices = {"1", "2"};
  q.arrows = {{"a", "1", "2"}};
  auto a2 = build_graded_quotient(q, Q);
  try {
    make_module(a2, Side::Left, 1,
                {{"1", Matrix::from_ints(Q, {{1}})}, {"2", Matrix::from_ints(Q, {{1}})}, {"a", Matrix(Q, 1, 1)}});
    FAIL("expected NotUnital");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUnital);
  }
  CHECK_THROWS_AS(make_module(F1(), Side::Left, 1, {{"y", Matrix(Q, 1, 1)}}), Error);
}

TEST_CASE("structural modules") {
  auto s1 = structural_modules(F1());
  CHECK(s1.regular->dim() == 2);
  CHECK(s1.projectives.size() == 1);
  CHECK(s1.simples[0]->dim() == 1);
  auto s2 = structural_modules(F2());
  CHECK(s2.regular->dim() == 3);
  CHECK(s2.projectives[0]->dim() == 3);
  CHECK(s2.simples[0]->dim() == 1);
  TablePresentation t;
  t.dim = 2;
  t.mul = {{{Rational(1), Rational(0)}, {Rational(0), Rational(0)}},
           {{Rational(0), Rational(0)}, {Rational(0), Rational(1)}}};
  t.one = {Rational(1), Rational(1)};
  t.idempotents = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  auto qq = structural_modules(build_table_algebra(t, Q));
  CHECK(qq.projectives.size() == 2);
  CHECK(qq.projectives[0]->dim() == 1);
  CHECK(qq.projectives[1]->dim() == 1);
  for (auto* s : {&s1, &s2, &qq}) {
    s->regular->validate();
    for (auto& p : s->projectives) p->validate();
    for (auto& p : s->simples) p->validate();
  }
}

TEST_CASE("matlis duality") {
  std::mt19937_64 rng(5);
  auto ds1 = matlis_dual(S1());
  CHECK(ds1->side() == Side::Right);
  CHECK(iso_test(as_left(ds1, F1()), S1(), rng).verdict == IsoVerdict::Isomorphic);
  for (int t = 0; t < 10; ++t) {
    auto m = random_rad2_module(F2(), 1 + t % 2, 1 + t % 3, rng);
    auto dd = matlis_dual(matlis_dual(m));
    CHECK(dd->acting().get() == m->acting().get());
    CHECK(iso_test(dd, m, rng).verdict == IsoVerdict::Isomorphic);
  }
  auto dl = matlis_dual(structural_modules(F2()).regular);
  CHECK(dl->dim() == 3);
  auto soc = submodule(dl, dl->socle());
  CHECK(soc.module->dim() == 1);
  // socle of D(A) is the dual of the top of A
  auto simple_right = structural_modules(F2(), Side::Right).simples[0];
  CHECK(iso_test(soc.module, simple_right, rng).verdict == IsoVerdict::Isomorphic);
}

TEST_CASE("direct sums") {
  auto z = direct_sum({}, F1(), Side::Left);
  CHECK(z.sum->dim() == 0);
  auto ss = direct_sum({S1(), S1()});
  CHECK(ss.sum->dim() == 2);
  CHECK(ss.sum->act(gen(F1(), "x")).is_zero());
  auto reg = structural_modules(F2()).regular;
  auto rs = direct_sum({reg, S2()});
  CHECK(rs.sum->dim() == 4);
  Matrix total(Q, 4, 4);
  for (std::size_t i = 0; i < 2; ++i) {
    rs.injections[i].validate();
    rs.projections[i].validate();
    CHECK(compose(rs.projections[i], rs.injections[i]).matrix == Matrix::identity(Q, rs.projections[i].target->dim()));
    total = total + compose(rs.injections[i], rs.projections[i]).matrix;
  }
  CHECK(total == Matrix::identity(Q, 4));
}

TEST_CASE("hom spaces") {
  std::mt19937_64 rng(9);
  for (auto a : {F1(), F2(), F3()}) {
    auto reg = structural_modules(a).regular;
    for (int t = 0; t < 3; ++t) {
      ModulePtr m = a == F3() ? ImGstar() : random_rad2_module(a, 1 + t, 2, rng);
      HomSpace h(reg, m);
      CHECK(h.dim() == m->dim());
      for (const auto& phi : h.basis()) ModuleHom{reg, m, phi}.validate();
    }
  }
  // Hom(S1, F1): phi(1) must be killed by x, so lands in span{x}.
  CHECK(HomSpace(S1(), structural_modules(F1()).regular).dim() == 1);
  CHECK(HomSpace(structural_modules(F2()).regular, S2()).dim() == 1);
  // coordinates round-trip
  auto m = random_rad2_module(F2(), 2, 2, rng);
  HomSpace h(m, m);
  Matrix c(Q, h.dim(), 1);
  for (std::size_t k = 0; k < h.dim(); ++k) c(k, 0) = Rational(static_cast<std::int64_t>(k) - 2);
  CHECK(h.coords(h.element(c)) == c);
}

TEST_CASE("hom modules over a bimodule") {
  auto c1 = matlis_bimodule(F1());
  c1.validate();
  auto h1 = hom_module(c1, c1.left_module(), HomVariant::FromC);
  CHECK(h1.module->dim() == 2);
  h1.module->validate();
  auto c2 = matlis_bimodule(F2());
  c2.validate();
  auto h2 = hom_module(c2, c2.left_module(), HomVariant::FromC);
  CHECK(h2.module->dim() == 3);
  h2.module->validate();
  std::mt19937_64 rng(1);
  CHECK(iso_test(h2.module, structural_modules(F2()).regular, rng).verdict == IsoVerdict::Isomorphic);
  auto z = hom_module(c2, zero_module(F2(), Side::Left), HomVariant::FromC);
  CHECK(z.module->dim() == 0);
  auto into = hom_module(c2, S2(), HomVariant::IntoC);
  CHECK(into.module->side() == Side::Right);
  into.module->validate();
  regular_bimodule(F3()).validate();
  matlis_bimodule(F3()).validate();
}

TEST_CASE("tensor products") {
  std::mt19937_64 rng(2);
  auto reg = regular_bimodule(F2());
  auto m = random_rad2_module(F2(), 2, 1, rng);
  auto t = tensor(reg, m);
  CHECK(t.dim == m->dim());
  t.module->validate();
  CHECK(iso_test(t.module, m, rng).verdict == IsoVerdict::Isomorphic);

  auto c = matlis_bimodule(F2());
  auto inj = c.left_module();
  auto hc = hom_module(c, inj, HomVariant::FromC);
  auto ct = tensor(c, hc.module);
  CHECK(ct.dim == 3);
  CHECK(iso_test(ct.module, inj, rng).verdict == IsoVerdict::Isomorphic);

  auto s1r = matlis_dual(S1());
  CHECK(tensor(s1r, S1()).dim == 1);
}

TEST_CASE("subquotients") {
  auto reg = structural_modules(F1()).regular;
  auto id = identity_hom(reg);
  auto sq = subquotients(id);
  CHECK(sq.kernel.module->dim() == 0);
  CHECK(sq.image.module->dim() == 2);
  CHECK(sq.cokernel.module->dim() == 0);

  auto f = f9();
  CHECK(compose(f, f).matrix.is_zero());
  auto s9 = subquotients(f);
  CHECK(s9.image.module->dim() == 2);
  CHECK(s9.kernel.module->dim() + s9.image.module->dim() == 4);
  CHECK(s9.image.module->dim() + s9.cokernel.module->dim() == 4);
  CHECK(compose(s9.image.inclusion, s9.coimage).matrix == f.matrix);
  s9.kernel.inclusion.validate();
  s9.image.inclusion.validate();
  s9.coimage.validate();
  s9.cokernel.projection.validate();

  ModuleHom mx{reg, reg, F1()->left_mult_by(gen(F1(), "x"))};
  mx.validate();
  auto sx = subquotients(mx);
  std::mt19937_64 rng(3);
  CHECK(iso_test(sx.kernel.module, S1(), rng).verdict == IsoVerdict::Isomorphic);
  CHECK(iso_test(sx.image.module, S1(), rng).verdict == IsoVerdict::Isomorphic);
}

TEST_CASE("paper fixture modules") {
  CHECK(ImGstar()->dim() > 0);
  ImGstar()->validate();
  coker_f10()->validate();
  im_f9_dual()->validate();
  CHECK(im_f9()->dim() == 2);
  auto gs = free_map_dual(F3(), g10_entries());
  // g*(1,0) = (v, x) and g*(0,1) = (y, z)
  Matrix e1(Q, 16, 1);
  e1(0, 0) = Rational(1);
  Matrix img = gs.matrix * e1;
  CHECK(img.block(0, 0, 8, 1) == gen(F3(), "V"));
  CHECK(img.block(8, 0, 8, 1) == gen(F3(), "X"));
}

TEST_CASE("iso_test agrees with a grid-search oracle") {
  std::mt19937_64 rng(2024);
  std::size_t agree = 0, total = 0, iso_count = 0;
  for (int t = 0; t < 100; ++t) {
    auto a = (t % 2) ? F1() : F2();
    std::size_t top = 1 + t % 2, soc = (t % 3 == 0) ? 1 : 2;
    if (top + soc > 3) soc = 3 - top;
    auto m = random_rad2_module(a, top, soc, rng, false, 1);
    ModulePtr n;
    if (t % 3 == 1) {
      n = random_rad2_module(a, top, soc, rng, false, 1);
    } else {
      // conjugate by a grid matrix with a grid inverse
      std::size_t d = m->dim();
      Matrix p = Matrix::identity(Q, d);
      std::uniform_int_distribution<int> pick(0, static_cast<int>(d) - 1);
      std::size_t i = pick(rng), j = pick(rng);
      if (i != j) p(i, j) = Rational(t % 4 == 0 ? -1 : 1);
      Matrix pinv = *inverse(p);
      std::vector<Matrix> act;
      for (const auto& x : m->actions()) act.push_back(p * x * pinv);
      n = module_from_actions(m->acting(), Side::Left, act);
    }
    auto r = iso_test(m, n, rng);
    bool oracle = grid_isomorphic(*m, *n);
    ++total;
    if ((r.verdict == IsoVerdict::Isomorphic) == oracle) ++agree;
    if (r.verdict == IsoVerdict::Isomorphic) {
      ++iso_count;
      REQUIRE(r.witness);
      CHECK(!determinant(*r.witness).is_zero());
      ModuleHom{m, n, *r.witness}.validate();
    }
  }
  CHECK(agree == total);
  CHECK(iso_count > 20);
}
