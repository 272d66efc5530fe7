#include <random>

#include "cotorkit/linalg.hpp"
#include "doctest.h"

using namespace cotorkit;

namespace {

const FieldDesc Q = FieldDesc::rationals();

// Laplace expansion; independent of the elimination code.
Rational minor_det(const FieldDesc& f, const std::vector<std::vector<Rational>>& m) {
  std::size_t n = m.size();
  if (n == 0) return Rational(1);
  Rational acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Rational>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(row);
    }
    Rational t = f.mul(m[0][j], minor_det(f, sub));
    acc = (j % 2 == 0) ? f.add(acc, t) : f.sub(acc, t);
  }
  return acc;
}

std::size_t minor_rank(const Matrix& a) {
  const FieldDesc& f = a.field();
  std::size_t best = 0;
  std::size_t r = a.rows(), c = a.cols();
  for (std::uint32_t rm = 1; rm < (1u << r); ++rm)
    for (std::uint32_t cm = 1; cm < (1u << c); ++cm) {
      if (__builtin_popcount(rm) != __builtin_popcount(cm)) continue;
      std::size_t k = __builtin_popcount(rm);
      if (k <= best) continue;
      std::vector<std::vector<Rational>> sub;
      for (std::size_t i = 0; i < r; ++i) {
        if (!(rm >> i & 1)) continue;
        std::vector<Rational> row;
        for (std::size_t j = 0; j < c; ++j)
          if (cm >> j & 1) row.push_back(a(i, j));
        sub.push_back(row);
      }
      if (!minor_det(f, sub).is_zero()) best = k;
    }
  return best;
}

Matrix random_matrix(const FieldDesc& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.embed(Rational(d(rng)));
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic is exact across the int64 boundary") {
  Rational big(std::int64_t{1} << 62);
  Rational sq = big * big;
  CHECK(!sq.is_small());
  CHECK((sq / big) == big);
  CHECK((sq - sq).is_zero());
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational::parse(" 10/4 ") == Rational(5, 2));
  CHECK(Rational::parse("-7").str() == "-7");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK_THROWS_AS(Rational::parse("1/-2"), Error);
}

TEST_CASE("prime field embedding and inverse") {
  FieldDesc f7 = FieldDesc::prime(7);
  CHECK(f7.embed(Rational(-1)) == Rational(6));
  CHECK(f7.embed(Rational(1, 3)) == Rational(5));
  CHECK(f7.mul(Rational(3), f7.inv(Rational(3))) == Rational(1));
  CHECK_THROWS_AS(FieldDesc::prime(9), Error);
  CHECK_THROWS_AS(f7.embed(Rational(1, 7)), Error);
}

TEST_CASE("rref basics") {
  auto r = rref(Matrix::identity(Q, 2));
  CHECK(r.rank == 2);
  CHECK(r.kernel.cols() == 0);

  Matrix m = Matrix::from_ints(Q, {{1, 2}, {2, 4}});
  auto s = rref(m);
  CHECK(s.rank == 1);
  REQUIRE(s.kernel.cols() == 1);
  CHECK(s.kernel == Matrix::from_ints(Q, {{-2}, {1}}));
  CHECK((m * s.kernel).is_zero());

  auto e = rref(Matrix(Q, 0, 3));
  CHECK(e.rank == 0);
  CHECK(e.kernel.cols() == 3);
}

TEST_CASE("rank agrees with the minor-expansion oracle over F7") {
  FieldDesc f7 = FieldDesc::prime(7);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    Matrix m = random_matrix(f7, 3, 3, rng, 0, 6);
    if (t % 3 == 0) {
      for (std::size_t j = 0; j < 3; ++j) m(2, j) = f7.add(m(0, j), f7.mul(Rational(2), m(1, j)));
    }
    CHECK(rank(m) == minor_rank(m));
    CHECK(rref(m).rank == minor_rank(m));
  }
}

TEST_CASE("rref invariants on random rational matrices") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    std::size_t r = 1 + t % 4, c = 1 + (t * 7) % 5;
    Matrix m = random_matrix(Q, r, c, rng, -3, 3);
    auto res = rref(m);
    CHECK(res.rank + res.kernel.cols() == c);
    CHECK((m * res.kernel).is_zero());
    CHECK(rref(res.reduced).reduced == res.reduced);
    CHECK(res.rank == minor_rank(m));
    // Row operations in a different order give the same reduced form.
    Matrix flipped(Q, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) flipped(i, j) = m(r - 1 - i, j);
    CHECK(rref(flipped).reduced == res.reduced);
  }
}

TEST_CASE("solve") {
  Matrix b = Matrix::from_ints(Q, {{3}, {-5}});
  auto x = solve(Matrix::identity(Q, 2), b);
  REQUIRE(x);
  CHECK(*x == b);

  Matrix a = Matrix::from_ints(Q, {{1, 2}, {2, 4}});
  auto y = solve(a, Matrix::from_ints(Q, {{1}, {2}}));
  REQUIRE(y);
  CHECK(a * *y == Matrix::from_ints(Q, {{1}, {2}}));
  Matrix bad = Matrix::from_ints(Q, {{1}, {0}});
  CHECK_FALSE(solve(a, bad));
  CHECK(rank(Matrix::hstack(Q, 2, {a, bad})) == rank(a) + 1);
  CHECK_THROWS_AS(solve(a, Matrix(Q, 3, 1)), Error);
}

TEST_CASE("kronecker") {
  CHECK(kronecker(Matrix::identity(Q, 2), Matrix::identity(Q, 3)) == Matrix::identity(Q, 6));
  Matrix a = Matrix::from_ints(Q, {{1, 2}, {3, 4}});
  CHECK(kronecker(a, Matrix(Q, 2, 3)).is_zero());
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    Matrix x = random_matrix(Q, 2, 2, rng, -2, 2);
    Matrix y = random_matrix(Q, 3, 3, rng, -1, 1);
    Matrix k = kronecker(x, y);
    CHECK(k.rows() == 6);
    CHECK(rank(k) == rank(x) * rank(y));
  }
  CHECK_THROWS_AS(kronecker(a, Matrix(FieldDesc::prime(5), 1, 1)), Error);
}

TEST_CASE("subspace coordinates and quotients") {
  Matrix basis = Matrix::from_ints(Q, {{1, 0}, {1, 1}, {0, 2}});
  SubspaceCoords sc(basis);
  auto c = sc.coords(Matrix::from_ints(Q, {{2}, {5}, {6}}));
  REQUIRE(c);
  CHECK(*c == Matrix::from_ints(Q, {{2}, {3}}));
  CHECK_FALSE(sc.coords(Matrix::from_ints(Q, {{1}, {0}, {0}})));

  QuotientSpace qs(Q, 3, basis);
  CHECK(qs.projection().rows() == 1);
  CHECK((qs.projection() * basis).is_zero());
  CHECK(qs.projection() * qs.section() == Matrix::identity(Q, 1));
}

TEST_CASE("determinant and inverse") {
  Matrix a = Matrix::from_ints(Q, {{2, 1}, {7, 4}});
  CHECK(determinant(a) == Rational(1));
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(a * *inv == Matrix::identity(Q, 2));
  CHECK_FALSE(inverse(Matrix::from_ints(Q, {{1, 2}, {2, 4}})));
}
