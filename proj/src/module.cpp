#include "cotorkit/module.hpp"

#include <sstream>

namespace cotorkit {

namespace {

Matrix lin_comb(const std::vector<Matrix>& mats, const Matrix& x, std::size_t rows, std::size_t cols, const FieldDesc& f) {
  Matrix r(f, rows, cols);
  for (std::size_t i = 0; i < mats.size(); ++i)
    if (!x(i, 0).is_zero()) r.add_scaled(mats[i], x(i, 0));
  return r;
}

std::vector<std::size_t> independent_columns(const Matrix& m) {
  if (m.cols() == 0 || m.rows() == 0) return {};
  return rref(m).pivot_cols;
}

}  // namespace

Module::Module(AlgebraPtr acting, Side side, std::vector<Matrix> action, std::size_t dim)
    : acting_(std::move(acting)), side_(side), dim_(dim), action_(std::move(action)), cache_(std::make_shared<Cache>()) {
  require(acting_ != nullptr, ErrorCode::Validation, "module without algebra");
  require(action_.size() == acting_->dim(), ErrorCode::DimensionMismatch,
          "module needs one action matrix per algebra basis element");
  for (const auto& a : action_) {
    require(a.rows() == dim_ && a.cols() == dim_, ErrorCode::DimensionMismatch, "action matrix has wrong shape");
    require(a.field() == acting_->field(), ErrorCode::FieldMismatch, "action matrix over the wrong field");
  }
}

Matrix Module::act(const Matrix& element) const { return lin_comb(action_, element, dim_, dim_, field()); }

void Module::validate() const {
  const Algebra& a = *acting_;
  require(act(a.one()) == Matrix::identity(field(), dim_), ErrorCode::NotUnital, "identity does not act as identity");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (action_[i] * action_[j] != act(a.left_mult(i).col(j))) {
        fail(ErrorCode::RelationViolated, "action is not multiplicative on " + a.labels()[i] + " * " + a.labels()[j]);
      }
    }
}

const Matrix& Module::radical_image() const {
  std::call_once(cache_->rad_once, [this] {
    const Matrix& j = acting_->radical();
    std::vector<Matrix> parts;
    for (std::size_t c = 0; c < j.cols(); ++c) parts.push_back(act(j.col(c)));
    if (parts.empty() || dim_ == 0) {
      cache_->rad = Matrix(field(), dim_, 0);
    } else {
      cache_->rad = column_basis(Matrix::hstack(field(), dim_, parts));
    }
  });
  return cache_->rad;
}

Matrix Module::socle() const {
  const Matrix& j = acting_->radical();
  std::vector<Matrix> parts;
  for (std::size_t c = 0; c < j.cols(); ++c) parts.push_back(act(j.col(c)));
  if (parts.empty()) return Matrix::identity(field(), dim_);
  return kernel(Matrix::vstack(field(), dim_, parts));
}

const CoverData& Module::cover_data() const {
  std::call_once(cache_->cover_once, [this] {
    const FieldDesc& f = field();
    CoverData cd;
    QuotientSpace top(f, dim_, radical_image());
    std::vector<Matrix> gens;
    for (std::size_t v : acting_->idempotent_representatives()) {
      Matrix e = act(acting_->idempotents()[v]);
      for (std::size_t c : independent_columns(top.projection() * e)) {
        gens.push_back(e.col(c));
        cd.vertex.push_back(v);
      }
    }
    cd.gens = gens.empty() ? Matrix(f, dim_, 0) : Matrix::hstack(f, dim_, gens);
    std::vector<Matrix> cols;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      cd.offset.push_back(cd.pdim);
      const Matrix& b = acting_->projective_basis(cd.vertex[j]);
      for (std::size_t k = 0; k < b.cols(); ++k) cols.push_back(act(b.col(k)) * gens[j]);
      cd.pdim += b.cols();
    }
    cd.epi = cols.empty() ? Matrix(f, dim_, 0) : Matrix::hstack(f, dim_, cols);
    auto s = solve(cd.epi, Matrix::identity(f, dim_));
    require(s.has_value(), ErrorCode::Internal, "projective cover is not surjective");
    cd.section = *s;
    cd.kernel = kernel(cd.epi);
    cache_->cover = std::move(cd);
  });
  return cache_->cover;
}

Module Module::reinterpret(AlgebraPtr acting, Side side) const {
  require(acting->same_table(*acting_), ErrorCode::AlgebraMismatch, "reinterpret needs an identical multiplication table");
  return Module(std::move(acting), side, action_, dim_);
}

bool same_category(const Module& a, const Module& b) { return a.acting().get() == b.acting().get() && a.side() == b.side(); }

void require_same_category(const Module& a, const Module& b, const char* what) {
  require(a.side() == b.side(), ErrorCode::SideMismatch, std::string(what) + ": modules on different sides");
  require(a.acting().get() == b.acting().get(), ErrorCode::AlgebraMismatch,
          std::string(what) + ": modules over different algebras");
}

// ---------------------------------------------------------------------------

void ModuleHom::validate() const {
  require_same_category(*source, *target, "module map");
  require(matrix.rows() == target->dim() && matrix.cols() == source->dim(), ErrorCode::DimensionMismatch,
          "module map matrix has wrong shape");
  for (const auto& g : source->acting()->generators()) {
    if (matrix * source->act(g.element) != target->act(g.element) * matrix) {
      fail(ErrorCode::Validation, "map does not commute with the action of " + g.name);
    }
  }
}

ModuleHom compose(const ModuleHom& g, const ModuleHom& f) {
  require(f.target->dim() == g.source->dim(), ErrorCode::DimensionMismatch, "compose: dimension mismatch");
  return {f.source, g.target, g.matrix * f.matrix};
}

ModuleHom identity_hom(const ModulePtr& m) { return {m, m, Matrix::identity(m->field(), m->dim())}; }

ModuleHom zero_hom(const ModulePtr& s, const ModulePtr& t) { return {s, t, Matrix(s->field(), t->dim(), s->dim())}; }

// ---------------------------------------------------------------------------

Bimodule::Bimodule(AlgebraPtr r, AlgebraPtr s, std::size_t dim, std::vector<Matrix> lact, std::vector<Matrix> ract)
    : r_(std::move(r)), s_(std::move(s)), dim_(dim), lact_(std::move(lact)), ract_(std::move(ract)) {
  require(r_->field() == s_->field(), ErrorCode::FieldMismatch, "bimodule algebras over different fields");
  left_ = std::make_shared<Module>(r_, Side::Left, lact_, dim_);
  right_ = std::make_shared<Module>(s_->opposite(), Side::Right, ract_, dim_);
}

Bimodule Bimodule::flipped() const { return Bimodule(s_->opposite(), r_->opposite(), dim_, ract_, lact_); }

void Bimodule::validate() const {
  left_->validate();
  right_->validate();
  for (std::size_t i = 0; i < lact_.size(); ++i)
    for (std::size_t j = 0; j < ract_.size(); ++j) {
      require(lact_[i] * ract_[j] == ract_[j] * lact_[i], ErrorCode::Validation,
              "left and right actions do not commute on " + r_->labels()[i] + ", " + s_->labels()[j]);
    }
}

Bimodule matlis_bimodule(const AlgebraPtr& a) {
  std::vector<Matrix> l, r;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    l.push_back(a->right_mult(i).transpose());
    r.push_back(a->left_mult(i).transpose());
  }
  return Bimodule(a, a, a->dim(), l, r);
}

Bimodule regular_bimodule(const AlgebraPtr& a) {
  std::vector<Matrix> l, r;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    l.push_back(a->left_mult(i));
    r.push_back(a->right_mult(i));
  }
  return Bimodule(a, a, a->dim(), l, r);
}

// ---------------------------------------------------------------------------

ModulePtr module_from_actions(const AlgebraPtr& acting, Side side, std::vector<Matrix> action) {
  std::size_t dim = action.empty() ? 0 : action[0].rows();
  return std::make_shared<Module>(acting, side, std::move(action), dim);
}

ModulePtr make_module(const AlgebraPtr& a, Side side, std::size_t dim, const std::map<std::string, Matrix>& gens) {
  AlgebraPtr acting = side == Side::Left ? a : a->opposite();
  const FieldDesc& f = a->field();
  std::map<std::string, std::size_t> gidx;
  for (std::size_t g = 0; g < acting->generators().size(); ++g) gidx[acting->generators()[g].name] = g;
  for (const auto& [name, m] : gens) {
    require(gidx.count(name), ErrorCode::Validation, "unknown generator \"" + name + "\"");
    require(m.rows() == dim && m.cols() == dim, ErrorCode::DimensionMismatch,
            "action of \"" + name + "\" must be " + std::to_string(dim) + "x" + std::to_string(dim));
  }
  std::vector<Matrix> gact;
  for (const auto& g : acting->generators()) {
    auto it = gens.find(g.name);
    if (it != gens.end()) {
      gact.push_back(it->second);
    } else if (g.element == acting->one()) {
      gact.push_back(Matrix::identity(f, dim));
    } else {
      fail(ErrorCode::Validation, "missing action for generator \"" + g.name + "\"");
    }
  }
  std::vector<Matrix> action;
  for (const auto& w : acting->basis_words()) {
    Matrix m = Matrix::identity(f, dim);
    for (auto g : w) m = m * gact[g];
    action.push_back(m);
  }
  auto mod = std::make_shared<Module>(acting, side, action, dim);
  mod->validate();
  for (std::size_t g = 0; g < gact.size(); ++g) {
    if (mod->act(acting->generators()[g].element) != gact[g]) {
      fail(ErrorCode::RelationViolated, "action of \"" + acting->generators()[g].name + "\" is inconsistent with the relations");
    }
  }
  return mod;
}

ModulePtr zero_module(const AlgebraPtr& acting, Side side) {
  std::vector<Matrix> act(acting->dim(), Matrix(acting->field(), 0, 0));
  return std::make_shared<Module>(acting, side, act, 0);
}

ModulePtr indecomposable_projective(const AlgebraPtr& acting, Side side, std::size_t v) {
  const Matrix& b = acting->projective_basis(v);
  SubspaceCoords sc(b);
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < acting->dim(); ++i) act.push_back(sc.coords_or_throw(acting->left_mult(i) * b, "projective"));
  return std::make_shared<Module>(acting, side, act, b.cols());
}

StructuralModules structural_modules(const AlgebraPtr& a, Side side) {
  AlgebraPtr acting = side == Side::Left ? a : a->opposite();
  StructuralModules s;
  std::vector<Matrix> reg;
  for (std::size_t i = 0; i < acting->dim(); ++i) reg.push_back(acting->left_mult(i));
  s.regular = std::make_shared<Module>(acting, side, reg, acting->dim());
  for (std::size_t v = 0; v < acting->idempotents().size(); ++v) {
    auto p = indecomposable_projective(acting, side, v);
    s.projectives.push_back(p);
    s.simples.push_back(quotient_module(p, p->radical_image()).module);
  }
  return s;
}

ModulePtr matlis_dual(const ModulePtr& m) {
  std::vector<Matrix> act;
  for (const auto& a : m->actions()) act.push_back(a.transpose());
  return std::make_shared<Module>(m->acting()->opposite(), m->side() == Side::Left ? Side::Right : Side::Left, act,
                                  m->dim());
}

ModuleHom matlis_dual(const ModuleHom& f, const ModulePtr& dsource, const ModulePtr& dtarget) {
  return {dtarget, dsource, f.matrix.transpose()};
}

DirectSum direct_sum(const std::vector<ModulePtr>& ms, const AlgebraPtr& acting_hint, Side side_hint) {
  AlgebraPtr acting = ms.empty() ? acting_hint : ms[0]->acting();
  Side side = ms.empty() ? side_hint : ms[0]->side();
  require(acting != nullptr, ErrorCode::Validation, "direct sum of an empty list needs an algebra");
  for (const auto& m : ms) require_same_category(*ms[0], *m, "direct sum");
  const FieldDesc& f = acting->field();
  std::size_t total = 0;
  for (const auto& m : ms) total += m->dim();
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < acting->dim(); ++i) {
    std::vector<Matrix> parts;
    for (const auto& m : ms) parts.push_back(m->action(i));
    act.push_back(Matrix::block_diag(f, parts));
  }
  DirectSum ds;
  ds.sum = std::make_shared<Module>(acting, side, act, total);
  std::size_t off = 0;
  for (const auto& m : ms) {
    Matrix inj(f, total, m->dim());
    inj.set_block(off, 0, Matrix::identity(f, m->dim()));
    ds.injections.push_back({m, ds.sum, inj});
    ds.projections.push_back({ds.sum, m, inj.transpose()});
    off += m->dim();
  }
  return ds;
}

ModuleHom direct_sum_map(const std::vector<std::vector<Matrix>>& blocks, const ModulePtr& src, const ModulePtr& tgt) {
  std::vector<Matrix> rows;
  for (const auto& row : blocks) rows.push_back(Matrix::hstack(src->field(), row.empty() ? 0 : row[0].rows(), row));
  return {src, tgt, Matrix::vstack(src->field(), src->dim(), rows)};
}

SubModule submodule(const ModulePtr& m, const Matrix& span) {
  const FieldDesc& f = m->field();
  Matrix basis = span.cols() ? column_basis(span) : Matrix(f, m->dim(), 0);
  std::vector<Matrix> act;
  if (basis.cols() == 0) {
    act.assign(m->acting()->dim(), Matrix(f, 0, 0));
  } else {
    SubspaceCoords sc(basis);
    for (const auto& a : m->actions()) {
      auto c = sc.coords(a * basis);
      require(c.has_value(), ErrorCode::Validation, "subspace is not a submodule");
      act.push_back(*c);
    }
  }
  auto sub = std::make_shared<Module>(m->acting(), m->side(), act, basis.cols());
  return {sub, {sub, m, basis}};
}

QuotientModule quotient_module(const ModulePtr& m, const Matrix& span) {
  const FieldDesc& f = m->field();
  QuotientSpace q(f, m->dim(), span);
  std::vector<Matrix> act;
  for (const auto& a : m->actions()) act.push_back(q.projection() * a * q.section());
  auto quo = std::make_shared<Module>(m->acting(), m->side(), act, q.dim());
  return {quo, {m, quo, q.projection()}, q.section()};
}

Subquotients subquotients(const ModuleHom& h) {
  Subquotients s;
  s.kernel = submodule(h.source, kernel(h.matrix));
  s.image = submodule(h.target, h.matrix);
  const FieldDesc& f = h.source->field();
  Matrix coim(f, s.image.module->dim(), h.source->dim());
  if (s.image.module->dim() > 0) coim = SubspaceCoords(s.image.inclusion.matrix).coords_or_throw(h.matrix, "coimage");
  s.coimage = {h.source, s.image.module, coim};
  s.cokernel = quotient_module(h.target, h.matrix);
  return s;
}

// ---------------------------------------------------------------------------

HomSpace::HomSpace(ModulePtr m, ModulePtr n) : m_(std::move(m)), n_(std::move(n)) {
  require_same_category(*m_, *n_, "Hom");
  const FieldDesc& f = m_->field();
  const Algebra& a = *m_->acting();
  const CoverData& cd = m_->cover_data();
  const std::size_t t = cd.vertex.size();
  const std::size_t nd = n_->dim();
  std::vector<std::size_t> poff;
  std::size_t params = 0;
  for (std::size_t j = 0; j < t; ++j) {
    Matrix e = n_->act(a.idempotents()[cd.vertex[j]]);
    target_blocks_.push_back(nd ? column_basis(e) : Matrix(f, 0, 0));
    poff.push_back(params);
    params += target_blocks_.back().cols();
  }
  // Constraint: for every kernel vector k of the cover, sum_j act_N(B_j k_j) E_j t_j = 0.
  Matrix cons(f, cd.kernel.cols() * nd, params);
  for (std::size_t kk = 0; kk < cd.kernel.cols(); ++kk) {
    for (std::size_t j = 0; j < t; ++j) {
      const Matrix& b = a.projective_basis(cd.vertex[j]);
      Matrix kj = cd.kernel.block(cd.offset[j], kk, b.cols(), 1);
      if (kj.is_zero() || target_blocks_[j].cols() == 0) continue;
      cons.set_block(kk * nd, poff[j], n_->act(b * kj) * target_blocks_[j]);
    }
  }
  param_basis_ = kernel(cons);
  // phi = Phi_z * section, Phi_z column (j, b) = act_N(b) z_j.
  std::vector<std::vector<Matrix>> bact(t);
  for (std::size_t j = 0; j < t; ++j) {
    const Matrix& b = a.projective_basis(cd.vertex[j]);
    for (std::size_t k = 0; k < b.cols(); ++k) bact[j].push_back(n_->act(b.col(k)));
  }
  for (std::size_t h = 0; h < param_basis_.cols(); ++h) {
    Matrix phi_p(f, nd, cd.pdim);
    for (std::size_t j = 0; j < t; ++j) {
      const Matrix& e = target_blocks_[j];
      if (e.cols() == 0) continue;
      Matrix z = e * param_basis_.block(poff[j], h, e.cols(), 1);
      for (std::size_t k = 0; k < bact[j].size(); ++k) phi_p.set_block(0, cd.offset[j] + k, bact[j][k] * z);
    }
    basis_.push_back(phi_p * cd.section);
  }
  param_coords_.emplace(param_basis_);
}

Matrix HomSpace::coords(const Matrix& phi) const {
  const FieldDesc& f = m_->field();
  const CoverData& cd = m_->cover_data();
  std::vector<Matrix> parts;
  for (std::size_t j = 0; j < cd.vertex.size(); ++j) {
    const Matrix& e = target_blocks_[j];
    if (e.cols() == 0) continue;
    Matrix z = phi * cd.gens.col(j);
    parts.push_back(SubspaceCoords(e).coords_or_throw(z, "Hom coordinates"));
  }
  Matrix stacked = parts.empty() ? Matrix(f, 0, 1) : Matrix::vstack(f, 1, parts);
  auto c = param_coords_->coords(stacked);
  require(c.has_value(), ErrorCode::Internal, "Hom coordinates: not a homomorphism");
  return *c;
}

Matrix HomSpace::element(const Matrix& coeffs) const {
  return lin_comb(basis_, coeffs, n_->dim(), m_->dim(), m_->field());
}

HomModule hom_module(const Bimodule& c, const ModulePtr& m, HomVariant v) {
  const FieldDesc& f = m->field();
  HomModule out;
  const auto& ract = c.right_actions();
  if (v == HomVariant::FromC) {
    auto hs = std::make_shared<HomSpace>(c.left_module(), m);
    std::vector<Matrix> act;
    for (const auto& r : ract) {
      std::vector<Matrix> cols;
      for (const auto& phi : hs->basis()) cols.push_back(hs->coords(phi * r));
      act.push_back(cols.empty() ? Matrix(f, 0, 0) : Matrix::hstack(f, hs->dim(), cols));
    }
    out.module = std::make_shared<Module>(c.right_algebra(), Side::Left, act, hs->dim());
    out.space = hs;
  } else {
    auto hs = std::make_shared<HomSpace>(m, c.left_module());
    std::vector<Matrix> act;
    for (const auto& r : ract) {
      std::vector<Matrix> cols;
      for (const auto& phi : hs->basis()) cols.push_back(hs->coords(r * phi));
      act.push_back(cols.empty() ? Matrix(f, 0, 0) : Matrix::hstack(f, hs->dim(), cols));
    }
    out.module = std::make_shared<Module>(c.right_algebra()->opposite(), Side::Right, act, hs->dim());
    out.space = hs;
  }
  return out;
}

ModuleHom hom_covariant(const HomModule& src, const HomModule& dst, const ModuleHom& phi) {
  const FieldDesc& f = phi.source->field();
  Matrix m(f, dst.space->dim(), src.space->dim());
  for (std::size_t k = 0; k < src.space->dim(); ++k) m.set_block(0, k, dst.space->coords(phi.matrix * src.space->basis()[k]));
  return {src.module, dst.module, m};
}

ModuleHom hom_contravariant(const HomModule& src, const HomModule& dst, const ModuleHom& phi) {
  const FieldDesc& f = phi.source->field();
  Matrix m(f, dst.space->dim(), src.space->dim());
  for (std::size_t k = 0; k < src.space->dim(); ++k) m.set_block(0, k, dst.space->coords(src.space->basis()[k] * phi.matrix));
  return {src.module, dst.module, m};
}

// ---------------------------------------------------------------------------

namespace {

TensorProduct tensor_impl(const ModulePtr& x, const ModulePtr& n, const std::vector<Matrix>* lact,
                          const AlgebraPtr& r) {
  require(x->side() == Side::Right && n->side() == Side::Left, ErrorCode::SideMismatch,
          "tensor needs a right module and a left module");
  require(x->acting()->opposite().get() == n->acting().get(), ErrorCode::AlgebraMismatch,
          "tensor factors over different algebras");
  const FieldDesc& f = x->field();
  const std::size_t xd = x->dim(), nd = n->dim(), total = xd * nd;
  Matrix ix = Matrix::identity(f, xd), in = Matrix::identity(f, nd);
  std::vector<Matrix> rels;
  for (const auto& g : n->acting()->generators()) {
    if (g.element == n->acting()->one()) continue;
    rels.push_back(kronecker(x->act(g.element), in) - kronecker(ix, n->act(g.element)));
  }
  Matrix span = rels.empty() ? Matrix(f, total, 0) : Matrix::hstack(f, total, rels);
  QuotientSpace q(f, total, span);
  TensorProduct tp;
  tp.dim = q.dim();
  tp.projection = q.projection();
  tp.section = q.section();
  tp.xdim = xd;
  tp.ndim = nd;
  if (lact != nullptr) {
    std::vector<Matrix> act;
    for (const auto& l : *lact) act.push_back(q.projection() * kronecker(l, in) * q.section());
    tp.module = std::make_shared<Module>(r, Side::Left, act, q.dim());
  }
  return tp;
}

}  // namespace

TensorProduct tensor(const ModulePtr& x, const ModulePtr& n) { return tensor_impl(x, n, nullptr, nullptr); }

TensorProduct tensor(const Bimodule& c, const ModulePtr& n) {
  return tensor_impl(c.right_module(), n, &c.left_actions(), c.left_algebra());
}

Matrix tensor_map(const TensorProduct& src, const TensorProduct& dst, const Matrix& f, const Matrix& g) {
  return dst.projection * kronecker(f, g) * src.section;
}

// ---------------------------------------------------------------------------

IsoResult iso_test(const ModulePtr& m, const ModulePtr& n, std::mt19937_64& rng) {
  require_same_category(*m, *n, "iso_test");
  const FieldDesc& f = m->field();
  IsoResult res;
  auto no = [&](const std::string& why) {
    res.verdict = IsoVerdict::NotIsomorphic;
    res.certificate = why;
    return res;
  };
  if (m->dim() != n->dim()) return no("dimensions differ: " + std::to_string(m->dim()) + " vs " + std::to_string(n->dim()));
  if (m->dim() == 0) {
    res.verdict = IsoVerdict::Isomorphic;
    res.witness = Matrix(f, 0, 0);
    return res;
  }
  if (m->radical_image().cols() != n->radical_image().cols()) return no("radical layers differ");
  HomSpace mn(m, n), nm(n, m);
  if (mn.dim() != nm.dim()) {
    return no("dim Hom(M,N) = " + std::to_string(mn.dim()) + " but dim Hom(N,M) = " + std::to_string(nm.dim()));
  }
  if (mn.dim() == 0) return no("no nonzero homomorphisms");
  std::uniform_int_distribution<std::int64_t> coef(-1000000, 1000000);
  auto random_point = [&] {
    Matrix c(f, mn.dim(), 1);
    for (std::size_t k = 0; k < mn.dim(); ++k) c(k, 0) = f.embed(Rational(coef(rng)));
    return c;
  };
  auto try_point = [&](const Matrix& c) {
    Matrix phi = mn.element(c);
    if (!determinant(phi).is_zero()) {
      res.verdict = IsoVerdict::Isomorphic;
      res.witness = phi;
      return true;
    }
    return false;
  };
  for (int trial = 0; trial < 8; ++trial)
    if (try_point(random_point())) return res;
  // det(sum t_k phi_k) restricted to a line has degree <= dim; dim+1 zeros force it to vanish there.
  Matrix base = random_point(), dir = random_point();
  for (std::size_t s = 0; s <= m->dim(); ++s) {
    Matrix c = base + dir.scaled(f.embed(Rational(static_cast<std::int64_t>(s))));
    if (try_point(c)) return res;
  }
  if (!f.is_rationals()) {
    res.verdict = IsoVerdict::Undecided;
    res.certificate = "no invertible intertwiner found by sampling over " + f.name();
    return res;
  }
  std::ostringstream os;
  os << "generic intertwiner determinant vanished at 8 random points and at " << m->dim() + 1
     << " points of a random line";
  return no(os.str());
}

}  // namespace cotorkit
