#include "cotorkit/algebra.hpp"
#include "doctest.h"

using namespace cotorkit;

namespace {

const FieldDesc Q = FieldDesc::rationals();

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

// V, X, Y, Z
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

TablePresentation table_of(const Algebra& a) {
  TablePresentation t;
  t.dim = a.dim();
  t.mul.assign(a.dim(), std::vector<std::vector<Rational>>(a.dim(), std::vector<Rational>(a.dim())));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) t.mul[i][j][k] = a.mul(i, j, k);
  t.one = a.one().col_vec(0);
  for (const auto& e : a.idempotents()) t.idempotents.push_back(e.col_vec(0));
  return t;
}

bool is_two_sided_ideal(const Algebra& a, const Matrix& j) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (rank(Matrix::hstack(a.field(), a.dim(), {j, a.left_mult(i) * j})) != rank(j)) return false;
    if (rank(Matrix::hstack(a.field(), a.dim(), {j, a.right_mult(i) * j})) != rank(j)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("field as a one-dimensional table algebra") {
  TablePresentation t;
  t.dim = 1;
  t.mul = {{{Rational(1)}}};
  t.one = {Rational(1)};
  auto a = build_table_algebra(t, Q);
  CHECK(a->dim() == 1);
  CHECK(a->radical().cols() == 0);
  CHECK(radical_nilpotency_index(*a) == 1);
}

TEST_CASE("F1 = Q[x]/(x^2)") {
  auto a = build_graded_quotient(f1_presentation(), Q);
  REQUIRE(a->dim() == 2);
  CHECK(a->labels() == std::vector<std::string>{"1", "x"});
  CHECK(a->radical() == Matrix::from_ints(Q, {{0}, {1}}));
  CHECK(a->idempotents().size() == 1);
  CHECK(a->is_commutative());
  CHECK(a->opposite()->same_table(*a));
  CHECK(a->opposite()->opposite().get() == a.get());
  // table version validates too
  auto t = build_table_algebra(table_of(*a), Q);
  CHECK(t->same_table(*a));
  CHECK(t->radical().cols() == 1);
}

TEST_CASE("F2 two-loop quiver") {
  auto a = build_graded_quotient(f2_presentation(), Q);
  REQUIRE(a->dim() == 3);
  CHECK(a->labels() == std::vector<std::string>{"e", "alpha", "beta"});
  CHECK(a->radical().cols() == 2);
  CHECK(is_two_sided_ideal(*a, a->radical()));
  CHECK(radical_nilpotency_index(*a) == 2);
  CHECK(a->idempotents().size() == 1);
  CHECK(a->opposite()->same_table(*a));
  CHECK(a->generators().size() == 3);
}

TEST_CASE("corrupted F2 table is rejected with a witness") {
  auto a = build_graded_quotient(f2_presentation(), Q);
  auto t = table_of(*a);
  t.mul[1][2] = {Rational(1), Rational(0), Rational(0)};  // alpha*beta = e
  try {
    build_table_algebra(t, Q);
    FAIL("expected rejection");
  } catch (const Error& e) {
    bool ok = e.code() == ErrorCode::NonAssociative || e.code() == ErrorCode::BadIdentity;
    CHECK(ok);
    if (e.code() == ErrorCode::NonAssociative) CHECK(std::string(e.what()).find("(") != std::string::npos);
  }
}

TEST_CASE("F3 matches the monomial-basis oracle") {
  auto a = build_graded_quotient(f3_presentation(), Q);
  // Relation matrix in degree 2: 7 relations over the 10 quadratic monomials.
  // Ordering: V2 VX VY VZ X2 XY XZ Y2 YZ Z2.
  Matrix rel = Matrix::from_ints(Q, {
                                        {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                                        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
                                        {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
                                        {0, 1, 0, 0, 0, 0, 2, 0, 0, 0},
                                        {0, 0, 1, 0, 0, 0, 0, 0, 1, 0},
                                        {0, 1, 0, 0, 0, 0, 0, 1, 0, 0},
                                        {0, 0, 1, 0, -1, 0, 0, 0, 0, 0},
                                    });
  std::size_t deg2 = 10 - rank(rel);
  CHECK(deg2 == 3);
  std::size_t count2 = 0, count3 = 0;
  for (int g : *a->grading()) {
    count2 += g == 2;
    count3 += g == 3;
  }
  CHECK(count2 == deg2);
  CHECK(count3 == 0);
  // Standard monomials counted against a Groebner basis computed offline:
  // lead terms V^2, VX, X^2, VY, XY, Y^2, Z^2 leave 1 + 4 + 3 monomials.
  CHECK(a->dim() == 8);
  CHECK(a->is_commutative());
  CHECK(is_two_sided_ideal(*a, a->radical()));
}

TEST_CASE("builder errors") {
  auto c = f1_presentation();
  c.relations = {{{Rational(1), {2}}, {Rational(1), {1}}}};
  CHECK_THROWS_AS(build_graded_quotient(c, Q), Error);
  try {
    build_graded_quotient(c, Q);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InhomogeneousRelation);
  }
  CommutativePresentation poly;
  poly.variables = {"x"};
  poly.degree_bound = 5;
  try {
    build_graded_quotient(poly, Q);
    FAIL("expected NotNilpotentByBound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNilpotentByBound);
  }
  QuiverPresentation q = f2_presentation();
  q.relations.resize(2);  // alternating words never die
  q.degree_bound = 4;
  try {
    build_graded_quotient(q, Q);
    FAIL("expected NotNilpotentByBound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNilpotentByBound);
  }
}

TEST_CASE("semisimple Q x Q and a non-primitive idempotent") {
  TablePresentation t;
  t.dim = 2;
  t.mul = {{{Rational(1), Rational(0)}, {Rational(0), Rational(0)}},
           {{Rational(0), Rational(0)}, {Rational(0), Rational(1)}}};
  t.one = {Rational(1), Rational(1)};
  t.idempotents = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  auto a = build_table_algebra(t, Q);
  CHECK(a->idempotents().size() == 2);
  CHECK(a->idempotent_representatives().size() == 2);
  CHECK(a->radical().cols() == 0);
  t.idempotents = {};
  try {
    build_table_algebra(t, Q);
    FAIL("expected NotPrimitive");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPrimitive);
  }
  CHECK_THROWS_AS(build_table_algebra(t, FieldDesc::prime(2)), Error);
}

TEST_CASE("A2 quiver path algebra and its opposite") {
  QuiverPresentation q;
  q.vertices = {"1", "2"};
  q.arrows = {{"a", "1", "2"}, {"b", "2", "1"}};
  q.relations = {{{Rational(1), {"a", "b"}}}};
  auto a = build_graded_quotient(q, Q);
  // e1, e2, a, b, a-then... b then a survives (path b,a), a then b killed
  CHECK(a->dim() == 5);
  CHECK(a->idempotent_representatives().size() == 2);
  auto op = a->opposite();
  CHECK_FALSE(op->same_table(*a));
  auto re = build_table_algebra(table_of(*op), Q);
  CHECK(re->dim() == 5);
  std::size_t total = 0;
  for (std::size_t v = 0; v < 2; ++v) total += a->projective_basis(v).cols();
  CHECK(total == 5);
}
