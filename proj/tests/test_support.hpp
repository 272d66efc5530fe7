#pragma once

#include <map>
#include <random>

#include "cotorkit/fixtures.hpp"
#include "cotorkit/homology.hpp"

namespace testing_support {

using namespace cotorkit;

inline const FieldDesc Q = FieldDesc::rationals();

inline ModulePtr as_left(const ModulePtr& m, const AlgebraPtr& a) {
  return std::make_shared<Module>(m->reinterpret(a, Side::Left));
}

// Loewy length two module over F1 / F2: top of size t, socle part of size s,
// each arrow a random map top -> socle, then a random change of basis.
inline ModulePtr random_rad2_module(const AlgebraPtr& a, std::size_t t, std::size_t s, std::mt19937_64& rng,
                             bool conjugate = true, int range = 2) {
  std::uniform_int_distribution<int> d(-range, range);
  std::size_t n = t + s;
  Matrix p = Matrix::identity(Q, n);
  if (conjugate) {
    do {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p(i, j) = Rational(d(rng));
    } while (determinant(p).is_zero());
  }
  Matrix pinv = *inverse(p);
  std::map<std::string, Matrix> gens;
  for (const auto& g : a->generators()) {
    if (g.element == a->one()) continue;
    Matrix m(Q, n, n);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < t; ++j) m(t + i, j) = Rational(d(rng));
    gens[g.name] = p * m * pinv;
  }
  return make_module(a, Side::Left, n, gens);
}

// Hom basis from the dense intertwining system (vec(phi A) = (A^T x I) vec(phi)),
// then exhaustive search over grid coefficients in that basis.
inline bool grid_isomorphic(const Module& m, const Module& n) {
  if (m.dim() != n.dim()) return false;
  const std::size_t d = m.dim();
  if (d == 0) return true;
  Matrix id = Matrix::identity(Q, d);
  std::vector<Matrix> eqs;
  for (const auto& g : m.acting()->generators())
    eqs.push_back(kronecker(m.act(g.element).transpose(), id) - kronecker(id, n.act(g.element)));
  Matrix hom = kernel(Matrix::vstack(Q, d * d, eqs));
  const std::size_t h = hom.cols();
  if (h == 0) return false;
  const int range = h <= 6 ? 2 : 1;
  std::vector<int> c(h, -range);
  while (true) {
    Matrix v(Q, d * d, 1);
    for (std::size_t k = 0; k < h; ++k) v.add_scaled(hom.col(k), Rational(c[k]));
    if (!determinant(Matrix::unvec(v, d, d)).is_zero()) return true;
    std::size_t k = 0;
    while (k < h && c[k] == range) c[k++] = -range;
    if (k == h) return false;
    ++c[k];
  }
}


// Dense Hom_A(M, N) basis, as vec'd matrices, from the Kronecker intertwining system.
inline Matrix dense_hom(const Module& m, const Module& n) {
  const std::size_t dm = m.dim(), dn = n.dim();
  if (dm == 0 || dn == 0) return Matrix(Q, dn * dm, 0);
  std::vector<Matrix> eqs;
  for (const auto& g : m.acting()->generators())
    eqs.push_back(kronecker(m.act(g.element).transpose(), Matrix::identity(Q, dn)) -
                  kronecker(Matrix::identity(Q, dm), n.act(g.element)));
  return kernel(Matrix::vstack(Q, dn * dm, eqs));
}

inline std::size_t hom_dim(const ModulePtr& m, const ModulePtr& n) { return dense_hom(*m, *n).cols(); }

// Ext^1 from 0 -> Hom(M,N) -> Hom(P0,N) -> Hom(Omega M,N) -> Ext^1(M,N) -> 0.
inline std::size_t ext1_oracle(const ModulePtr& m, const ModulePtr& n) {
  auto p0 = projective_cover(m).p;
  auto om = syzygy(m, 1);
  return hom_dim(om, n) + hom_dim(m, n) - hom_dim(p0, n);
}

inline std::size_t ext_oracle(const ModulePtr& m, const ModulePtr& n, std::size_t i) {
  if (i == 0) return hom_dim(m, n);
  return ext1_oracle(syzygy(m, i - 1), n);
}

// Tor_1 from 0 -> Tor_1(X,N) -> X (x) Omega N -> X (x) P0 -> X (x) N -> 0.
inline std::size_t tor_oracle(const ModulePtr& x, const ModulePtr& n, std::size_t i) {
  if (i == 0) return tensor(x, n).dim;
  auto m = syzygy(n, i - 1);
  auto p0 = projective_cover(m).p;
  return tensor(x, syzygy(m, 1)).dim + tensor(x, m).dim - tensor(x, p0).dim;
}

}  // namespace testing_support
