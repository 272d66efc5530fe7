#include "cotorkit/cotor.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cotorkit;
using namespace cotorkit::fixtures;
using namespace testing_support;

namespace {

bool iso(const ModulePtr& a, const ModulePtr& b) {
  std::mt19937_64 rng(3);
  return iso_test(a, b, rng).verdict == IsoVerdict::Isomorphic;
}

// Tr_C M straight from the definition: Coker Hom(P0, C) -> Hom(P1, C) with generic Hom modules.
ModulePtr literal_transpose(const ModulePtr& m, const SemidualizingContext& ctx) {
  auto r = min_resolution(m, ResolutionSide::Projective, 1);
  auto h0 = hom_module(*ctx.c, r.term(0), HomVariant::IntoC);
  auto h1 = hom_module(*ctx.c, r.term(1), HomVariant::IntoC);
  auto d = hom_contravariant(h0, h1, r.map(0));
  return quotient_module(h1.module, d.matrix).module;
}

// cTr_C M = Coker (f^0)_* with generic Hom modules.
ModulePtr literal_cotranspose(const ModulePtr& m, const SemidualizingContext& ctx) {
  auto r = min_resolution(m, ResolutionSide::Injective, 1);
  auto h0 = hom_module(*ctx.c, r.term(0), HomVariant::FromC);
  auto h1 = hom_module(*ctx.c, r.term(1), HomVariant::FromC);
  auto d = hom_covariant(h0, h1, r.map(0));
  return quotient_module(h1.module, d.matrix).module;
}

std::size_t rank_dim(const ModuleHom& f) { return f.matrix.rows() && f.matrix.cols() ? rank(f.matrix) : 0; }

Bimodule simple_bimodule() {
  auto s = S2();
  return Bimodule(F2(), F2(), 1, s->actions(), s->actions());
}

std::vector<ModulePtr> sample_modules(std::mt19937_64& rng) {
  std::vector<ModulePtr> ms = {S2(), structural_modules(F2()).regular};
  for (int k = 0; k < 4; ++k) ms.push_back(random_rad2_module(F2(), 1 + k % 2, 1 + k / 2, rng));
  return ms;
}

}  // namespace

TEST_CASE("context construction") {
  auto m = matlis_context(F2(), 4);
  CHECK(m->verified_bound == 4);
  CHECK(rank(m->left_homothety) == F2()->dim());
  CHECK(regular_context(F3(), 3)->kind == ContextKind::Regular);
  CHECK(matlis_context(F1(), 6)->c->dim() == 2);
  try {
    make_context(simple_bimodule(), 2);
    FAIL("expected HomothetyNotIso");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HomothetyNotIso);
  }
  QuiverPresentation q;
  q.vertices = {"1", "2"};
  q.arrows = {{"a", "1", "2"}};
  CHECK_THROWS_AS(regular_context(build_graded_quotient(q, Q), 1), Error);
}

TEST_CASE("transpose and cotranspose of simple modules") {
  auto reg = regular_context(F1(), 2);
  auto mat = matlis_context(F1(), 2);
  auto t = transpose(S1(), *reg);
  CHECK(t->dim() == 1);
  CHECK(t->side() == Side::Right);
  CHECK(iso(t, matlis_dual(S1())));
  auto ct = cotranspose(S1(), *mat);
  CHECK(iso(ct, S1()));
  auto p = structural_modules(F2()).regular;
  CHECK(transpose(p, *regular_context(F2(), 1))->dim() == 0);
  auto inj = matlis_dual(std::make_shared<Module>(p->reinterpret(F2()->opposite(), Side::Right)));
  CHECK(cotranspose(inj, *matlis_context(F2(), 1))->dim() == 0);
}

TEST_CASE("fast transpose matches the definition") {
  std::mt19937_64 rng(21);
  for (auto ctx : {matlis_context(F2(), 2), regular_context(F2(), 2)}) {
    for (const auto& m : sample_modules(rng)) {
      auto a = transpose(m, *ctx);
      a->validate();
      CHECK(iso(a, literal_transpose(m, *ctx)));
      auto b = cotranspose(m, *ctx);
      b->validate();
      CHECK(iso(b, literal_cotranspose(m, *ctx)));
    }
  }
  auto reg3 = regular_context(F3(), 1);
  CHECK(iso(transpose(im_f10(), *reg3), literal_transpose(im_f10(), *reg3)));
}

TEST_CASE("Tr A and cTr D(A) agree") {
  std::mt19937_64 rng(23);
  auto a = F2();
  auto reg = make_context(regular_bimodule(a), 1);
  auto mat_op = matlis_context(a->opposite(), 1);
  for (const auto& m : sample_modules(rng)) {
    auto tr = transpose(m, *reg);
    auto dm = as_left(matlis_dual(m), a->opposite());
    auto ctr = cotranspose(dm, *mat_op);
    CHECK(iso(as_left(tr, a->opposite()), ctr));
    // and the other way round
    auto mat = matlis_context(a, 1);
    auto reg_op = make_context(regular_bimodule(a->opposite()), 1);
    CHECK(iso(as_left(transpose(dm, *reg_op), a), cotranspose(m, *mat)));
  }
}

TEST_CASE("sigma and theta sequences") {
  std::mt19937_64 rng(29);
  std::vector<ContextPtr> ctxs = {matlis_context(F2(), 2), regular_context(F2(), 2), regular_context(F1(), 2)};
  for (const auto& ctx : ctxs) {
    std::vector<ModulePtr> ms = ctx->r.get() == F1().get() ? std::vector<ModulePtr>{S1(), im_f9_dual()}
                                                           : sample_modules(rng);
    for (const auto& m : ms) {
      auto cm = canonical_maps(m, *ctx);
      cm.theta.validate();
      cm.sigma.validate();
      auto tr = transpose(m, *ctx);
      auto ctr = cotranspose(m, *ctx);
      // 0 -> Ext^1(Tr M, C) -> M -> M** -> Ext^2(Tr M, C) -> 0
      auto e = ext_into_c(tr, *ctx, 1, 2);
      CHECK(e[0] == m->dim() - rank_dim(cm.sigma));
      CHECK(e[1] == cm.m_double.module->dim() - rank_dim(cm.sigma));
      // 0 -> Tor_2(C, cTr M) -> C (x) M_* -> M -> Tor_1(C, cTr M) -> 0
      auto t = tor_with_c(ctr, *ctx, 1, 2);
      CHECK(t[1] == cm.c_tensor.module->dim() - rank_dim(cm.theta));
      CHECK(t[0] == m->dim() - rank_dim(cm.theta));
      auto tmod = tor_module(*ctx->c, min_resolution(ctr, ResolutionSide::Projective, 2), 1);
      CHECK(tmod->dim() == t[0]);
    }
  }
}

TEST_CASE("Ext and Tor against C agree with the oracles") {
  std::mt19937_64 rng(31);
  auto ctx = matlis_context(F2(), 2);
  for (const auto& m : sample_modules(rng)) {
    auto e = ext_from_c(m, *ctx, 0, 2);
    for (std::size_t i = 0; i <= 2; ++i) CHECK(e[i] == ext_oracle(ctx->c_left(), m, i));
    for (std::size_t i = 0; i <= 1; ++i) CHECK(ext_from_c_module(m, *ctx, i)->dim() == e[i]);
    auto ms = lower_star(m, *ctx).module;
    auto t = tor_with_c(ms, *ctx, 0, 2);
    for (std::size_t i = 0; i <= 2; ++i) CHECK(t[i] == tor_oracle(ctx->c_right(), ms, i));
    auto tr = transpose(m, *ctx);
    auto x = ext_into_c(tr, *ctx, 0, 2);
    for (std::size_t i = 0; i <= 2; ++i) CHECK(x[i] == ext_oracle(tr, ctx->c_right(), i));
  }
}

TEST_CASE("worked examples") {
  auto reg3 = regular_context(F3(), 2);
  // Coker f10 is torsionfree through the bound, N = Im f10 only 1-torsionfree.
  CHECK(torsionfree_level(coker_f10(), *reg3, 4) == 4);
  CHECK(torsionfree_level(im_f10(), *reg3, 4) == 1);
  auto trn = transpose(im_f10(), *reg3);
  CHECK(ext_into_c(trn, *reg3, 2, 2)[0] == 3);
  CHECK(ext_into_c(trn, *reg3, 1, 1)[0] == 0);

  auto mat1 = matlis_context(F1(), 6);
  auto v = im_f9_dual();
  CHECK(cotorsionfree_level(v, *mat1, 6) == 6);
  CHECK(injective_envelope(v).i->dim() > v->dim());
  CHECK(is_gorenstein_injective(v, *mat1, 6).through_bound);
  CHECK(is_gorenstein_injective(v, *mat1, 6).str() == "Gorenstein injective up to bound 6: yes");
}

TEST_CASE("vanishing profile") {
  std::mt19937_64 rng(37);
  auto ctx = matlis_context(F2(), 3);
  for (const auto& m : sample_modules(rng)) {
    auto p = vanishing_profile(m, *ctx, 3);
    CHECK(p.cotorsionfree_up_to == cotorsionfree_level(m, *ctx, 3));
    CHECK(p.cograde.has_value());
    if (p.theta_iso) CHECK(p.theta_epi);
    CHECK(p.sigma_mono == (torsionfree_level(m, *ctx, 3) >= 1));
  }
  auto dl = matlis_dual(std::make_shared<Module>(structural_modules(F2()).regular->reinterpret(F2()->opposite(),
                                                                                               Side::Right)));
  auto p = vanishing_profile(dl, *ctx, 3);
  CHECK(p.cotorsionfree_through_bound());
  CHECK(p.cospherical_through_bound());
  CHECK(p.theta_iso);
}

TEST_CASE("Bass class") {
  auto ctx = matlis_context(F2(), 3);
  auto dl = ctx->c_left();
  CHECK(in_bass_class(dl, *ctx, 3).in_class());
  std::vector<ModulePtr> two = {dl, dl};
  CHECK(in_bass_class(direct_sum(two, F2(), Side::Left).sum, *ctx, 3).in_class());
  CHECK(!in_bass_class(S2(), *ctx, 3).in_class());
  auto reg = regular_context(F2(), 3);
  CHECK(in_bass_class(structural_modules(F2()).regular, *reg, 3).in_class());
}

TEST_CASE("add C precovers") {
  std::mt19937_64 rng(41);
  auto ctx = matlis_context(F2(), 2);
  for (const auto& m : sample_modules(rng)) {
    auto pc = addc_precover(m, *ctx);
    pc.map.validate();
    CHECK(pc.hom_surjective);
    auto p = vanishing_profile(m, *ctx, 2);
    CHECK(pc.epi == p.theta_epi);
  }
  auto reg = regular_context(F2(), 2);
  auto pr = proper_addc_resolution(S2(), *reg, 3);
  CHECK(pr.success);
  CHECK(pr.steps[0].copies == 1);
  auto bad = proper_addc_resolution(S2(), *ctx, 2);
  CHECK(!bad.success);
  CHECK(bad.failed_step + 1 == bad.steps.size());
  CHECK(!bad.steps.back().epi);
  for (std::size_t i = 0; i < bad.failed_step; ++i) CHECK(bad.steps[i].epi);
}

TEST_CASE("approximations") {
  std::mt19937_64 rng(43);
  std::vector<ContextPtr> ctxs = {matlis_context(F2(), 3), regular_context(F2(), 3), matlis_context(F1(), 3)};
  std::size_t built = 0, refused = 0;
  for (const auto& ctx : ctxs) {
    std::vector<ModulePtr> ms;
    if (ctx->r.get() == F1().get()) {
      ms = {S1(), im_f9_dual(), random_rad2_module(F1(), 2, 1, rng)};
    } else {
      ms = {S2(), random_rad2_module(F2(), 2, 1, rng), random_rad2_module(F2(), 1, 2, rng)};
    }
    for (const auto& m : ms) {
      for (std::size_t n = 1; n <= 3; ++n) {
        bool pre = cotorsionfree_level(cosyzygy(m, n), *ctx, n) == n;
        if (!pre) {
          CHECK_THROWS_AS(build_approximation(m, *ctx, n), Error);
          ++refused;
          continue;
        }
        auto a = build_approximation(m, *ctx, n);
        auto c = verify_approximation(a, m, *ctx);
        CHECK_MESSAGE(c.ok(), c.detail);
        CHECK(a.y_certificate.length() + 1 <= n);
        CHECK(!a.trace.empty());
        ++built;
      }
      if (cotorsionfree_level(cosyzygy(m, 2), *ctx, 3) == 3) {
        auto b = build_approximation(m, *ctx, 2, ApproxMode::BoundedInfinity);
        auto cb = verify_approximation(b, m, *ctx);
        CHECK_MESSAGE(cb.ok(), cb.detail);
      }
    }
  }
  CHECK(built >= 9);
  MESSAGE("approximations built: " << built << ", refused: " << refused);
}

TEST_CASE("approximation precondition") {
  // Over F1 with C = F1 every cosyzygy is cotorsionfree; with a non-self-injective
  // context the precondition can fail and must be reported.
  auto reg = regular_context(F2(), 2);
  bool failed = false;
  try {
    build_approximation(S2(), *reg, 2);
  } catch (const Error& e) {
    failed = true;
    CHECK(e.code() == ErrorCode::PreconditionFailed);
    CHECK(std::string(e.what()).find("Tor_") != std::string::npos);
  }
  CHECK(failed == (cotorsionfree_level(cosyzygy(S2(), 2), *reg, 2) < 2));
}

TEST_CASE("bounded injective dimension") {
  auto g = gorenstein_bounded(F2(), 4);
  CHECK(!g.left.value);
  CHECK(!g.right.value);
  CHECK(g.left.str() == "> 4");
  CHECK(!g.gorenstein());
  auto g1 = gorenstein_bounded(F1(), 6);
  CHECK(g1.gorenstein());
  CHECK(g1.left.str() == "0");
  auto ctx = matlis_context(F2(), 2);
  CHECK(!is_gorenstein_injective(S2(), *ctx, 2).through_bound);
  CHECK(!is_gorenstein_injective(S2(), *ctx, 2).dual_route);
  CHECK(is_gorenstein_injective(ctx->c_left(), *ctx, 2).through_bound);
  CHECK(is_gorenstein_injective(ctx->c_left(), *ctx, 2).dual_route);
}

TEST_CASE("corrupted transpose changes the answer") {
  auto reg3 = regular_context(F3(), 2);
  auto good = transpose(im_f10(), *reg3);
  auto bad = transpose(im_f10(), *reg3, TransposeMode::DropRelation);
  CHECK(good->dim() != bad->dim());
}

TEST_CASE("add C membership") {
  auto ctx = matlis_context(F2(), 2);
  std::vector<ModulePtr> two = {ctx->c_left(), ctx->c_left()};
  CHECK(in_add_c(direct_sum(two, F2(), Side::Left).sum, *ctx));
  CHECK(in_add_c(zero_module(F2(), Side::Left), *ctx));
  CHECK(!in_add_c(S2(), *ctx));
  std::vector<ModulePtr> mixed = {ctx->c_left(), S2()};
  CHECK(!in_add_c(direct_sum(mixed, F2(), Side::Left).sum, *ctx));
  auto reg = regular_context(F2(), 2);
  CHECK(in_add_c(structural_modules(F2()).regular, *reg));
  CHECK(!in_add_c(ctx->c_left(), *reg));
}
