#include "cotorkit/homology.hpp"

#include <algorithm>
#include <map>

namespace cotorkit {

namespace {

Matrix hcat(const FieldDesc& f, std::size_t rows, const std::vector<Matrix>& parts) {
  return parts.empty() ? Matrix(f, rows, 0) : Matrix::hstack(f, rows, parts);
}

std::vector<std::size_t> independent_cols(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  return rref(m).pivot_cols;
}

std::size_t rank_of(const Matrix& m) { return m.rows() == 0 || m.cols() == 0 ? 0 : rank(m); }

Matrix kernel_of(const Matrix& m) {
  if (m.rows() == 0) return Matrix::identity(m.field(), m.cols());
  if (m.cols() == 0) return Matrix(m.field(), 0, 0);
  return kernel(m);
}

// Columns spanning J * span(k) inside P.
Matrix radical_span(const ProjSum& p, const Matrix& k) {
  const Algebra& a = *p.acting();
  const Matrix& j = a.radical();
  std::vector<Matrix> parts;
  for (std::size_t c = 0; c < j.cols(); ++c) parts.push_back(p.act(j.col(c), k));
  Matrix all = hcat(a.field(), p.dim(), parts);
  return all.cols() ? all.cols_subset(independent_cols(all)) : all;
}

struct TopGens {
  std::vector<std::size_t> vertex;
  std::vector<Matrix> gens;
};

// Generators of the submodule spanned by the columns of k, minimal modulo its radical.
TopGens top_generators(const ProjSum& p, const Matrix& k) {
  const Algebra& a = *p.acting();
  const FieldDesc& f = a.field();
  TopGens t;
  if (k.cols() == 0) return t;
  QuotientSpace top(f, p.dim(), radical_span(p, k));
  for (std::size_t v : a.idempotent_representatives()) {
    Matrix e = p.act(a.idempotents()[v], k);
    for (std::size_t c : independent_cols(top.projection() * e)) {
      t.gens.push_back(e.col(c));
      t.vertex.push_back(v);
    }
  }
  return t;
}

// The map (+) A e_{v_j} -> P sending e_{v_j} to gens[j].
Matrix map_from_generators(const ProjSum& target, const ProjSum& source, const std::vector<Matrix>& gens) {
  const Algebra& a = *target.acting();
  std::vector<Matrix> cols;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const Matrix& b = a.projective_basis(source.vertices()[j]);
    for (std::size_t c = 0; c < b.cols(); ++c) cols.push_back(target.act(b.col(c), gens[j]));
  }
  return hcat(a.field(), target.dim(), cols);
}

void push_kernel_step(Resolution& r) {
  const ProjSum& last = r.proj.back();
  TopGens t = top_generators(last, r.pending_kernel);
  ProjSum next(last.acting(), last.side(), t.vertex);
  Matrix d = map_from_generators(last, next, t.gens);
  r.pending_kernel = kernel_of(d);
  r.proj.push_back(std::move(next));
  r.d.push_back(std::move(d));
  if (!r.zero_from && r.proj.back().dim() == 0) r.zero_from = r.proj.size() - 1;
}

Resolution projective_resolution(const ModulePtr& m, std::size_t length) {
  Resolution r;
  r.side = ResolutionSide::Projective;
  r.module = m;
  const CoverData& cd = m->cover_data();
  r.proj.emplace_back(m->acting(), m->side(), cd.vertex);
  r.augmentation = cd.epi;
  r.pending_kernel = cd.kernel;
  if (r.proj[0].dim() == 0) r.zero_from = 0;
  while (r.length() < length) push_kernel_step(r);
  return r;
}

// Basis of e_v N per vertex, shared across calls for one module.
struct CornerBases {
  const Module& n;
  std::map<std::size_t, std::pair<Matrix, SubspaceCoords>> cache;

  explicit CornerBases(const Module& m) : n(m) {}
  const std::pair<Matrix, SubspaceCoords>& get(std::size_t v) {
    auto it = cache.find(v);
    if (it != cache.end()) return it->second;
    Matrix b = corner_basis(n, v);
    SubspaceCoords sc;
    if (b.cols()) sc = SubspaceCoords(b);
    return cache.emplace(v, std::make_pair(b, sc)).first->second;
  }
};

ModuleHom zero_into(const ModulePtr& s, const ModulePtr& t) { return zero_hom(s, t); }

}  // namespace

// ---------------------------------------------------------------------------

ProjSum::ProjSum(AlgebraPtr acting, Side side, std::vector<std::size_t> vertices)
    : acting_(std::move(acting)), side_(side), vertex_(std::move(vertices)) {
  std::map<std::size_t, ModulePtr> seen;
  for (std::size_t v : vertex_) {
    auto it = seen.find(v);
    if (it == seen.end()) it = seen.emplace(v, indecomposable_projective(acting_, side_, v)).first;
    blocks_.push_back(it->second);
    offset_.push_back(dim_);
    dim_ += it->second->dim();
  }
}

std::size_t ProjSum::block_dim(std::size_t j) const { return blocks_[j]->dim(); }

Matrix ProjSum::act(const Matrix& element, const Matrix& vecs) const {
  const FieldDesc& f = acting_->field();
  Matrix out(f, dim_, vecs.cols());
  if (vecs.cols() == 0) return out;
  std::map<const Module*, Matrix> acts;
  for (std::size_t j = 0; j < vertex_.size(); ++j) {
    const Module* b = blocks_[j].get();
    auto it = acts.find(b);
    if (it == acts.end()) it = acts.emplace(b, b->act(element)).first;
    Matrix piece = vecs.block(offset_[j], 0, b->dim(), vecs.cols());
    if (piece.is_zero()) continue;
    out.set_block(offset_[j], 0, it->second * piece);
  }
  return out;
}

Matrix ProjSum::block_element(const Matrix& vecs, std::size_t c, std::size_t j) const {
  const Matrix& b = acting_->projective_basis(vertex_[j]);
  return b * vecs.block(offset_[j], c, blocks_[j]->dim(), 1);
}

ModulePtr ProjSum::module() const {
  std::call_once(lazy_->once, [this] {
    std::vector<ModulePtr> parts(blocks_.begin(), blocks_.end());
    lazy_->module = direct_sum(parts, acting_, side_).sum;
  });
  return lazy_->module;
}

ProjectiveCover projective_cover(const ModulePtr& m) {
  const CoverData& cd = m->cover_data();
  ProjectiveCover pc;
  pc.proj = ProjSum(m->acting(), m->side(), cd.vertex);
  pc.p = pc.proj.module();
  pc.epi = {pc.p, m, cd.epi};
  return pc;
}

InjectiveEnvelope injective_envelope(const ModulePtr& m) {
  ModulePtr dm = matlis_dual(m);
  ProjectiveCover pc = projective_cover(dm);
  InjectiveEnvelope e;
  e.i = matlis_dual(pc.p);
  e.mono = {m, e.i, pc.epi.matrix.transpose()};
  e.vertices = pc.proj.vertices();
  return e;
}

// ---------------------------------------------------------------------------

ModulePtr Resolution::term(std::size_t i) const {
  require(i < proj.size(), ErrorCode::Validation, "resolution term out of range");
  if (term_cache_.size() < proj.size()) term_cache_.resize(proj.size());
  if (!term_cache_[i]) {
    term_cache_[i] = side == ResolutionSide::Projective ? proj[i].module() : matlis_dual(proj[i].module());
  }
  return term_cache_[i];
}

ModuleHom Resolution::map(std::size_t i) const {
  require(i < d.size(), ErrorCode::Validation, "resolution map out of range");
  if (side == ResolutionSide::Projective) return {term(i + 1), term(i), d[i]};
  return {term(i), term(i + 1), d[i]};
}

ModuleHom Resolution::augmentation_hom() const {
  if (side == ResolutionSide::Projective) return {term(0), module, augmentation};
  return {module, term(0), augmentation};
}

std::vector<std::size_t> Resolution::multiplicities() const {
  std::vector<std::size_t> out;
  for (const auto& p : proj) out.push_back(p.summands());
  return out;
}

Resolution min_resolution(const ModulePtr& m, ResolutionSide side, std::size_t length) {
  if (side == ResolutionSide::Projective) return projective_resolution(m, length);
  Resolution r = projective_resolution(matlis_dual(m), length);
  r.side = ResolutionSide::Injective;
  r.module = m;
  r.augmentation = r.augmentation.transpose();
  for (auto& x : r.d) x = x.transpose();
  return r;
}

void extend_resolution(Resolution& r, std::size_t length) {
  require(r.minimal, ErrorCode::Validation, "only minimal resolutions can be extended");
  while (r.length() < length) {
    push_kernel_step(r);
    if (r.side == ResolutionSide::Injective) r.d.back() = r.d.back().transpose();
  }
}

ResolutionCheck verify_resolution(const Resolution& r) {
  ResolutionCheck c;
  const FieldDesc& f = r.module->field();
  auto fail_with = [&](bool& flag, const std::string& why) {
    flag = false;
    if (c.detail.empty()) c.detail = why;
  };
  // Orient every map as a chain P_{i+1} -> P_i (projective) or I^i -> I^{i+1}.
  const bool proj = r.side == ResolutionSide::Projective;
  if (proj) {
    if (rank_of(r.augmentation) != r.module->dim()) fail_with(c.exact, "augmentation is not surjective");
    if (!r.d.empty() && !(r.augmentation * r.d[0]).is_zero()) fail_with(c.complex, "augmentation o d0 != 0");
    for (std::size_t i = 0; i + 1 < r.d.size(); ++i)
      if (!(r.d[i] * r.d[i + 1]).is_zero()) fail_with(c.complex, "d" + std::to_string(i) + " o d" + std::to_string(i + 1) + " != 0");
    if (!r.d.empty() && r.term_dim(0) - rank_of(r.augmentation) != rank_of(r.d[0]))
      fail_with(c.exact, "not exact at degree 0");
    for (std::size_t i = 0; i + 1 < r.d.size(); ++i)
      if (r.term_dim(i + 1) - rank_of(r.d[i]) != rank_of(r.d[i + 1]))
        fail_with(c.exact, "not exact at degree " + std::to_string(i + 1));
    for (std::size_t i = 0; i < r.d.size(); ++i) {
      Matrix rad = radical_span(r.proj[i], Matrix::identity(f, r.term_dim(i)));
      if (rank_of(hcat(f, r.term_dim(i), {rad, r.d[i]})) != rank_of(rad))
        fail_with(c.minimal, "image of d" + std::to_string(i) + " leaves the radical");
    }
    Matrix rad0 = radical_span(r.proj[0], Matrix::identity(f, r.term_dim(0)));
    Matrix k0 = kernel_of(r.augmentation);
    if (rank_of(hcat(f, r.term_dim(0), {rad0, k0})) != rank_of(rad0)) fail_with(c.minimal, "cover is not minimal");
  } else {
    if (rank_of(r.augmentation) != r.module->dim()) fail_with(c.exact, "coaugmentation is not injective");
    if (!r.d.empty() && !(r.d[0] * r.augmentation).is_zero()) fail_with(c.complex, "d0 o coaugmentation != 0");
    for (std::size_t i = 0; i + 1 < r.d.size(); ++i)
      if (!(r.d[i + 1] * r.d[i]).is_zero()) fail_with(c.complex, "d" + std::to_string(i + 1) + " o d" + std::to_string(i) + " != 0");
    if (!r.d.empty() && r.term_dim(0) - rank_of(r.d[0]) != rank_of(r.augmentation))
      fail_with(c.exact, "not exact at degree 0");
    for (std::size_t i = 0; i + 1 < r.d.size(); ++i)
      if (r.term_dim(i + 1) - rank_of(r.d[i + 1]) != rank_of(r.d[i]))
        fail_with(c.exact, "not exact at degree " + std::to_string(i + 1));
    for (std::size_t i = 0; i <= r.d.size() && i < r.proj.size(); ++i) {
      const Matrix& in = i == 0 ? r.augmentation : r.d[i - 1];
      Matrix soc = r.term(i)->socle();
      if (rank_of(hcat(f, r.term_dim(i), {in, soc})) != rank_of(in))
        fail_with(c.minimal, "socle of I^" + std::to_string(i) + " is not in the image");
    }
  }
  if (!r.minimal) c.minimal = false;
  return c;
}

ModulePtr syzygy(const ModulePtr& m, std::size_t n) {
  if (n == 0) return m;
  Resolution r = projective_resolution(m, n);
  return submodule(r.term(n - 1), r.d[n - 1]).module;
}

Cosyzygy cosyzygy_of(const Resolution& r, std::size_t n) {
  require(r.side == ResolutionSide::Injective, ErrorCode::Validation, "cosyzygy needs an injective coresolution");
  require(r.length() >= n, ErrorCode::Validation, "coresolution too short for cosyzygy");
  if (n == 0) return {r.module, std::nullopt, r.augmentation_hom()};
  Subquotients s = subquotients(r.map(n - 1));
  return {s.image.module, s.coimage, s.image.inclusion};
}

ModulePtr cosyzygy(const ModulePtr& m, std::size_t n) {
  return cosyzygy_of(min_resolution(m, ResolutionSide::Injective, n), n).module;
}

// ---------------------------------------------------------------------------

Matrix hom_differential(const ProjSum& src, const ProjSum& dst, const Matrix& d, const ModulePtr& n) {
  require(src.acting().get() == n->acting().get() && src.side() == n->side(), ErrorCode::AlgebraMismatch,
          "Hom differential: module over a different algebra");
  const FieldDesc& f = n->field();
  CornerBases cb(*n);
  std::vector<std::size_t> row_off, col_off;
  std::size_t rows = 0, cols = 0;
  for (std::size_t k = 0; k < dst.summands(); ++k) {
    row_off.push_back(rows);
    rows += cb.get(dst.vertices()[k]).first.cols();
  }
  for (std::size_t j = 0; j < src.summands(); ++j) {
    col_off.push_back(cols);
    cols += cb.get(src.vertices()[j]).first.cols();
  }
  Matrix out(f, rows, cols);
  for (std::size_t k = 0; k < dst.summands(); ++k) {
    const auto& ek = cb.get(dst.vertices()[k]);
    if (ek.first.cols() == 0) continue;
    for (std::size_t j = 0; j < src.summands(); ++j) {
      const auto& ej = cb.get(src.vertices()[j]);
      if (ej.first.cols() == 0) continue;
      Matrix beta = src.block_element(d, dst.offset(k), j);
      if (beta.is_zero()) continue;
      out.set_block(row_off[k], col_off[j], ek.second.coords_or_throw(n->act(beta) * ej.first, "Hom differential"));
    }
  }
  return out;
}

Matrix tensor_differential(const ProjSum& src, const ProjSum& dst, const Matrix& d, const ModulePtr& x) {
  require(x->acting()->same_table(*src.acting()->opposite()) && x->side() != src.side(), ErrorCode::AlgebraMismatch,
          "tensor differential: modules on incompatible sides");
  const FieldDesc& f = x->field();
  CornerBases cb(*x);
  std::vector<std::size_t> row_off, col_off;
  std::size_t rows = 0, cols = 0;
  for (std::size_t j = 0; j < dst.summands(); ++j) {
    row_off.push_back(rows);
    rows += cb.get(dst.vertices()[j]).first.cols();
  }
  for (std::size_t k = 0; k < src.summands(); ++k) {
    col_off.push_back(cols);
    cols += cb.get(src.vertices()[k]).first.cols();
  }
  Matrix out(f, rows, cols);
  for (std::size_t k = 0; k < src.summands(); ++k) {
    const auto& fk = cb.get(src.vertices()[k]);
    if (fk.first.cols() == 0) continue;
    for (std::size_t j = 0; j < dst.summands(); ++j) {
      const auto& fj = cb.get(dst.vertices()[j]);
      if (fj.first.cols() == 0) continue;
      Matrix beta = dst.block_element(d, src.offset(k), j);
      if (beta.is_zero()) continue;
      out.set_block(row_off[j], col_off[k], fj.second.coords_or_throw(x->act(beta) * fk.first, "tensor differential"));
    }
  }
  return out;
}

std::vector<std::size_t> ext_dims(const Resolution& p, const ModulePtr& n, std::size_t from, std::size_t to,
                                  bool stop_at_nonzero) {
  require(p.side == ResolutionSide::Projective, ErrorCode::Validation, "Ext needs a projective resolution");
  require(p.length() >= to + 1, ErrorCode::Validation, "resolution too short for Ext");
  require_same_category(*p.module, *n, "Ext");
  CornerBases cb(*n);
  auto hom_dim = [&](std::size_t i) {
    std::size_t s = 0;
    for (std::size_t v : p.proj[i].vertices()) s += cb.get(v).first.cols();
    return s;
  };
  std::map<std::size_t, std::size_t> ranks;  // rank of delta^i : Hom(P_i) -> Hom(P_{i+1})
  auto delta_rank = [&](std::size_t i) {
    auto it = ranks.find(i);
    if (it != ranks.end()) return it->second;
    std::size_t r = 0;
    if (hom_dim(i) && hom_dim(i + 1)) r = rank_of(hom_differential(p.proj[i], p.proj[i + 1], p.d[i], n));
    ranks[i] = r;
    return r;
  };
  std::vector<std::size_t> out;
  for (std::size_t i = from; i <= to; ++i) {
    std::size_t h = hom_dim(i);
    std::size_t e = h == 0 ? 0 : h - delta_rank(i) - (i == 0 ? 0 : delta_rank(i - 1));
    out.push_back(e);
    if (stop_at_nonzero && e != 0) break;
  }
  return out;
}

std::vector<std::size_t> tor_dims(const ModulePtr& x, const Resolution& p, std::size_t from, std::size_t to,
                                  bool stop_at_nonzero) {
  require(p.side == ResolutionSide::Projective, ErrorCode::Validation, "Tor needs a projective resolution");
  require(p.length() >= to + 1, ErrorCode::Validation, "resolution too short for Tor");
  require(x->side() != p.module->side() && x->acting()->same_table(*p.module->acting()->opposite()),
          ErrorCode::SideMismatch, "Tor needs a right module and a left module over the same algebra");
  CornerBases cb(*x);
  auto t_dim = [&](std::size_t i) {
    std::size_t s = 0;
    for (std::size_t v : p.proj[i].vertices()) s += cb.get(v).first.cols();
    return s;
  };
  std::map<std::size_t, std::size_t> ranks;  // rank of X (x) d_{i-1} : X P_i -> X P_{i-1}
  auto boundary_rank = [&](std::size_t i) {
    auto it = ranks.find(i);
    if (it != ranks.end()) return it->second;
    std::size_t r = 0;
    if (i >= 1 && t_dim(i) && t_dim(i - 1)) r = rank_of(tensor_differential(p.proj[i], p.proj[i - 1], p.d[i - 1], x));
    ranks[i] = r;
    return r;
  };
  std::vector<std::size_t> out;
  for (std::size_t i = from; i <= to; ++i) {
    std::size_t t = t_dim(i);
    std::size_t v = t == 0 ? 0 : t - boundary_rank(i) - boundary_rank(i + 1);
    out.push_back(v);
    if (stop_at_nonzero && v != 0) break;
  }
  return out;
}

std::size_t ext_dim(const ModulePtr& m, const ModulePtr& n, std::size_t i) {
  return ext_dims(projective_resolution(m, i + 1), n, i, i)[0];
}

std::size_t tor_dim(const ModulePtr& x, const ModulePtr& n, std::size_t i) {
  return tor_dims(x, projective_resolution(n, i + 1), i, i)[0];
}

namespace {

// Grows the cheaper of two resolutions until one is long enough or has stopped.
// Returns 0 or 1 for the winner, which is then extended to `need`.
int race(Resolution& a, Resolution& b, std::size_t need) {
  for (;;) {
    for (int k = 0; k < 2; ++k) {
      Resolution& r = k ? b : a;
      if (r.zero_from || r.length() >= need) {
        extend_resolution(r, need);
        return k;
      }
    }
    Resolution& r = a.proj.back().dim() <= b.proj.back().dim() ? a : b;
    extend_resolution(r, r.length() + 1);
  }
}

}  // namespace

std::vector<std::size_t> ext_dims_balanced(const ModulePtr& m, const ModulePtr& n, std::size_t from, std::size_t to,
                                           bool stop_at_nonzero) {
  require_same_category(*m, *n, "Ext");
  Resolution a = projective_resolution(m, 0);
  Resolution b = projective_resolution(matlis_dual(n), 0);
  if (race(a, b, to + 1) == 0) return ext_dims(a, n, from, to, stop_at_nonzero);
  return tor_dims(m, b, from, to, stop_at_nonzero);
}

std::vector<std::size_t> tor_dims_balanced(const ModulePtr& x, const ModulePtr& n, std::size_t from, std::size_t to,
                                           bool stop_at_nonzero) {
  Resolution a = projective_resolution(n, 0);
  auto x_left = std::make_shared<Module>(x->reinterpret(x->acting(), Side::Left));
  Resolution b = projective_resolution(x_left, 0);
  if (race(a, b, to + 1) == 0) return tor_dims(x, a, from, to, stop_at_nonzero);
  auto n_right = std::make_shared<Module>(n->reinterpret(n->acting(), Side::Right));
  return tor_dims(n_right, b, from, to, stop_at_nonzero);
}

ModulePtr homology_module(const ModuleHom& in, const ModuleHom& out) {
  require(in.target.get() == out.source.get() || in.target->dim() == out.source->dim(), ErrorCode::Validation,
          "homology of maps that do not compose");
  SubModule k = submodule(out.source, kernel_of(out.matrix));
  if (k.module->dim() == 0) return k.module;
  Matrix img = SubspaceCoords(k.inclusion.matrix).coords_or_throw(in.matrix, "homology: image outside kernel");
  return quotient_module(k.module, img).module;
}

Matrix corner_basis(const Module& n, std::size_t v) {
  const FieldDesc& f = n.field();
  if (n.dim() == 0) return Matrix(f, 0, 0);
  Matrix e = n.act(n.acting()->idempotents()[v]);
  return e.cols_subset(independent_cols(e));
}

ModulePtr corner_sum(const ProjSum& p, const Module& n, const AlgebraPtr& acting, Side side,
                     const std::vector<Matrix>& ops) {
  const FieldDesc& f = n.field();
  CornerBases cb(n);
  std::vector<Matrix> act;
  for (const auto& op : ops) {
    std::vector<Matrix> blocks;
    for (std::size_t v : p.vertices()) {
      const auto& e = cb.get(v);
      blocks.push_back(e.first.cols() ? e.second.coords_or_throw(op * e.first, "corner sum") : Matrix(f, 0, 0));
    }
    act.push_back(Matrix::block_diag(f, blocks));
  }
  std::size_t dim = 0;
  for (std::size_t v : p.vertices()) dim += cb.get(v).first.cols();
  return std::make_shared<Module>(acting, side, act, dim);
}

ModulePtr tor_module(const Bimodule& c, const Resolution& p, std::size_t i) {
  require(p.length() >= i + 1, ErrorCode::Validation, "resolution too short for Tor");
  const ModulePtr& x = c.right_module();
  const AlgebraPtr& r = c.left_algebra();
  auto term = [&](std::size_t deg) { return corner_sum(p.proj[deg], *x, r, Side::Left, c.left_actions()); };
  ModulePtr mid = term(i);
  ModuleHom in{term(i + 1), mid, tensor_differential(p.proj[i + 1], p.proj[i], p.d[i], x)};
  if (i == 0) return homology_module(in, zero_into(mid, zero_module(r, Side::Left)));
  ModuleHom out{mid, term(i - 1), tensor_differential(p.proj[i], p.proj[i - 1], p.d[i - 1], x)};
  return homology_module(in, out);
}

std::size_t ext_dim_injective(const ModulePtr& m, const Resolution& inj, std::size_t i) {
  require(inj.side == ResolutionSide::Injective, ErrorCode::Validation, "needs an injective coresolution");
  require(inj.length() >= i + 1, ErrorCode::Validation, "coresolution too short for Ext");
  require_same_category(*m, *inj.module, "Ext");
  auto space = [&](std::size_t j) { return HomSpace(m, inj.term(j)); };
  auto delta_rank = [&](const HomSpace& a, const HomSpace& b, std::size_t j) {
    if (a.dim() == 0 || b.dim() == 0) return std::size_t{0};
    std::vector<Matrix> cols;
    for (const auto& phi : a.basis()) cols.push_back(b.coords(inj.d[j] * phi));
    return rank_of(hcat(m->field(), b.dim(), cols));
  };
  HomSpace hi = space(i), hn = space(i + 1);
  std::size_t r = delta_rank(hi, hn, i);
  std::size_t rp = 0;
  if (i > 0) rp = delta_rank(space(i - 1), hi, i - 1);
  return hi.dim() - r - rp;
}

std::size_t ext_dim_generic(const Resolution& p, const ModulePtr& n, std::size_t i) {
  require(p.side == ResolutionSide::Projective, ErrorCode::Validation, "needs a projective resolution");
  require(p.length() >= i + 1, ErrorCode::Validation, "resolution too short for Ext");
  auto space = [&](std::size_t j) { return HomSpace(p.term(j), n); };
  auto delta_rank = [&](const HomSpace& a, const HomSpace& b, std::size_t j) {
    if (a.dim() == 0 || b.dim() == 0) return std::size_t{0};
    std::vector<Matrix> cols;
    for (const auto& phi : a.basis()) cols.push_back(b.coords(phi * p.d[j]));
    return rank_of(hcat(n->field(), b.dim(), cols));
  };
  HomSpace hi = space(i), hn = space(i + 1);
  std::size_t r = delta_rank(hi, hn, i);
  std::size_t rp = 0;
  if (i > 0) rp = delta_rank(space(i - 1), hi, i - 1);
  return hi.dim() - r - rp;
}

Resolution pad_resolution(const Resolution& r, std::size_t k, std::size_t v) {
  require(r.side == ResolutionSide::Projective, ErrorCode::Validation, "padding needs a projective resolution");
  require(r.length() >= k + 1, ErrorCode::Validation, "resolution too short to pad");
  const FieldDesc& f = r.module->field();
  Resolution out;
  out.side = r.side;
  out.module = r.module;
  out.minimal = false;
  out.proj = r.proj;
  out.d = r.d;
  out.augmentation = r.augmentation;
  for (std::size_t deg : {k, k + 1}) {
    auto vs = r.proj[deg].vertices();
    vs.push_back(v);
    out.proj[deg] = ProjSum(r.module->acting(), r.module->side(), vs);
  }
  const std::size_t e = out.proj[k].dim() - r.proj[k].dim();
  auto widen = [&](const Matrix& m, std::size_t extra_rows, std::size_t extra_cols) {
    Matrix w(f, m.rows() + extra_rows, m.cols() + extra_cols);
    w.set_block(0, 0, m);
    return w;
  };
  Matrix dk = widen(r.d[k], e, e);
  dk.set_block(r.d[k].rows(), r.d[k].cols(), Matrix::identity(f, e));
  out.d[k] = dk;
  if (k == 0) out.augmentation = widen(r.augmentation, 0, e);
  else out.d[k - 1] = widen(r.d[k - 1], 0, e);
  if (k + 1 < r.d.size()) out.d[k + 1] = widen(r.d[k + 1], e, 0);
  out.zero_from.reset();
  for (std::size_t i = 0; i < out.proj.size(); ++i)
    if (out.proj[i].dim() == 0) {
      out.zero_from = i;
      break;
    }
  return out;
}

// ---------------------------------------------------------------------------

Pullback pullback(const ModuleHom& f, const ModuleHom& g) {
  require(f.target->dim() == g.target->dim(), ErrorCode::Validation, "pullback needs a common target");
  const FieldDesc& fd = f.source->field();
  DirectSum xy = direct_sum({f.source, g.source});
  Matrix diff = Matrix::hstack(fd, f.target->dim(), {f.matrix, g.matrix.scaled(Rational(-1))});
  SubModule p = submodule(xy.sum, kernel_of(diff));
  return {p.module, compose(xy.projections[0], p.inclusion), compose(xy.projections[1], p.inclusion)};
}

Pushout pushout(const ModuleHom& f, const ModuleHom& g) {
  require(f.source->dim() == g.source->dim(), ErrorCode::Validation, "pushout needs a common source");
  const FieldDesc& fd = f.source->field();
  DirectSum xy = direct_sum({f.target, g.target});
  Matrix rel = Matrix::vstack(fd, f.source->dim(), {f.matrix, g.matrix.scaled(Rational(-1))});
  QuotientModule q = quotient_module(xy.sum, rel);
  return {q.module, compose(q.projection, xy.injections[0]), compose(q.projection, xy.injections[1])};
}

ExactnessResult is_exact_at(const Complex& c, std::size_t pos) {
  require(pos < c.terms.size(), ErrorCode::Validation, "exactness position out of range");
  const std::size_t n = c.terms[pos]->dim();
  std::size_t in_rank = pos > 0 ? rank_of(c.maps[pos - 1].matrix) : 0;
  std::size_t ker = pos < c.maps.size() ? n - rank_of(c.maps[pos].matrix) : n;
  ExactnessResult r;
  r.defect = ker >= in_rank ? ker - in_rank : 0;
  r.exact = ker == in_rank;
  return r;
}

bool is_complex(const Complex& c) {
  for (std::size_t i = 0; i + 1 < c.maps.size(); ++i)
    if (!(c.maps[i + 1].matrix * c.maps[i].matrix).is_zero()) return false;
  return true;
}

}  // namespace cotorkit
