#include "cotorkit/fixtures.hpp"

namespace cotorkit::fixtures {

namespace {
const FieldDesc kQ = FieldDesc::rationals();
}

CommutativePresentation f1_presentation() {
  CommutativePresentation c;
  c.variables = {"x"};
  c.relations = {{{Rational(1), {2}}}};
  return c;
}

QuiverPresentation f2_presentation() {
  QuiverPresentation q;
  q.vertices = {"e"};
  q.arrows = {{"alpha", "e", "e"}, {"beta", "e", "e"}};
  for (auto [a, b] : std::vector<std::pair<std::string, std::string>>{
           {"alpha", "alpha"}, {"beta", "beta"}, {"alpha", "beta"}, {"beta", "alpha"}})
    q.relations.push_back({{Rational(1), {a, b}}});
  return q;
}

CommutativePresentation f3_presentation() {
  CommutativePresentation c;
  c.variables = {"V", "X", "Y", "Z"};
  auto m = [](int v, int x, int y, int z) { return std::vector<int>{v, x, y, z}; };
  c.relations = {
      {{Rational(1), m(2, 0, 0, 0)}},
      {{Rational(1), m(0, 0, 0, 2)}},
      {{Rational(1), m(0, 1, 1, 0)}},
      {{Rational(1), m(1, 1, 0, 0)}, {Rational(2), m(0, 1, 0, 1)}},
      {{Rational(1), m(1, 0, 1, 0)}, {Rational(1), m(0, 0, 1, 1)}},
      {{Rational(1), m(1, 1, 0, 0)}, {Rational(1), m(0, 0, 2, 0)}},
      {{Rational(1), m(1, 0, 1, 0)}, {Rational(-1), m(0, 2, 0, 0)}},
  };
  return c;
}

AlgebraPtr F1() {
  static const AlgebraPtr a = build_graded_quotient(f1_presentation(), kQ);
  return a;
}

AlgebraPtr F2() {
  static const AlgebraPtr a = build_graded_quotient(f2_presentation(), kQ);
  return a;
}

AlgebraPtr F3() {
  static const AlgebraPtr a = build_graded_quotient(f3_presentation(), kQ);
  return a;
}

Matrix gen(const AlgebraPtr& a, const std::string& name, std::int64_t c) {
  for (const auto& g : a->generators())
    if (g.name == name) return g.element.scaled(a->field().embed(Rational(c)));
  fail(ErrorCode::Validation, "no generator named " + name);
}

ModulePtr free_module(const AlgebraPtr& a, std::size_t rank) {
  auto reg = structural_modules(a).regular;
  return direct_sum(std::vector<ModulePtr>(rank, reg), a, Side::Left).sum;
}

ModuleHom free_map(const AlgebraPtr& a, const std::vector<std::vector<Matrix>>& entries) {
  const std::size_t m = entries.size(), n = entries.empty() ? 0 : entries[0].size();
  const std::size_t d = a->dim();
  Matrix mat(a->field(), m * d, n * d);
  // r e_j |-> sum_i r a_ij e_i : block (i, j) is right multiplication by a_ij.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) mat.set_block(i * d, j * d, a->right_mult_by(entries[i][j]));
  ModuleHom h{free_module(a, n), free_module(a, m), mat};
  h.validate();
  return h;
}

ModuleHom free_map_dual(const AlgebraPtr& a, const std::vector<std::vector<Matrix>>& entries) {
  require(a->is_commutative(), ErrorCode::Validation, "free_map_dual identifies duals over commutative algebras");
  std::vector<std::vector<Matrix>> t(entries.empty() ? 0 : entries[0].size(), std::vector<Matrix>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < entries[i].size(); ++j) t[j][i] = entries[i][j];
  return free_map(a, t);
}

ModulePtr S1() {
  static const ModulePtr m = make_module(F1(), Side::Left, 1, {{"x", Matrix(kQ, 1, 1)}});
  return m;
}

ModulePtr S2() {
  static const ModulePtr m = make_module(F2(), Side::Left, 1, {{"alpha", Matrix(kQ, 1, 1)}, {"beta", Matrix(kQ, 1, 1)}});
  return m;
}

std::vector<std::vector<Matrix>> f9_entries() {
  auto a = F1();
  Matrix x = gen(a, "x"), z(kQ, a->dim(), 1);
  return {{x, z}, {x, x}};
}

std::vector<std::vector<Matrix>> f10_entries() {
  auto a = F3();
  return {{gen(a, "V"), gen(a, "X", 2)}, {gen(a, "Y"), gen(a, "Z")}};
}

std::vector<std::vector<Matrix>> g10_entries() {
  auto a = F3();
  return {{gen(a, "V"), gen(a, "X")}, {gen(a, "Y"), gen(a, "Z")}};
}

ModuleHom f9() { return free_map(F1(), f9_entries()); }
ModuleHom f10() { return free_map(F3(), f10_entries()); }
ModuleHom g10() { return free_map(F3(), g10_entries()); }

ModulePtr ImGstar() { return subquotients(free_map_dual(F3(), g10_entries())).image.module; }
ModulePtr coker_f10() { return subquotients(f10()).cokernel.module; }
ModulePtr im_f10() { return subquotients(f10()).image.module; }
ModulePtr im_f9() { return subquotients(f9()).image.module; }

ModulePtr im_f9_dual() {
  auto d = matlis_dual(im_f9());
  return std::make_shared<Module>(d->reinterpret(F1(), Side::Left));
}

}  // namespace cotorkit::fixtures
