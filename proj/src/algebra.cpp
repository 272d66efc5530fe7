#include "cotorkit/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace cotorkit {

class AlgebraBuilder {
 public:
  FieldDesc field;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<Matrix> left;  // left multiplication matrices
  Matrix one;
  std::vector<Matrix> idempotents;
  std::optional<std::vector<int>> grading;
  std::vector<AlgebraGenerator> generators;
  std::vector<std::vector<std::size_t>> words;
  Presentation presentation;

  static AlgebraPtr finalize(AlgebraBuilder& b);
};

namespace {

Matrix unit(const FieldDesc& f, std::size_t n, std::size_t i) {
  Matrix v(f, n, 1);
  v(i, 0) = Rational(1);
  return v;
}

Matrix combine(const std::vector<Matrix>& mats, const Matrix& x) {
  Matrix r(mats.empty() ? x.field() : mats[0].field(), mats.empty() ? 0 : mats[0].rows(),
           mats.empty() ? 0 : mats[0].cols());
  for (std::size_t i = 0; i < mats.size(); ++i)
    if (!x(i, 0).is_zero()) r.add_scaled(mats[i], x(i, 0));
  return r;
}

void validate_table(const AlgebraBuilder& b) {
  const std::size_t d = b.dim;
  const FieldDesc& f = b.field;
  // (b_i b_j) b_k == b_i (b_j b_k)  <=>  L_{b_i b_j} == L_i L_j
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Matrix lhs = combine(b.left, b.left[i].col(j));
      Matrix rhs = b.left[i] * b.left[j];
      if (lhs != rhs) {
        for (std::size_t k = 0; k < d; ++k) {
          if (lhs.col(k) != rhs.col(k)) {
            fail(ErrorCode::NonAssociative, "associativity fails on basis triple (" + b.labels[i] + ", " +
                                                b.labels[j] + ", " + b.labels[k] + ")");
          }
        }
      }
    }
  }
  Matrix l_one = combine(b.left, b.one);
  require(l_one == Matrix::identity(f, d), ErrorCode::BadIdentity, "declared identity is not a left identity");
  for (std::size_t i = 0; i < d; ++i) {
    require(b.left[i] * b.one == unit(f, d, i), ErrorCode::BadIdentity,
            "declared identity is not a right identity for " + b.labels[i]);
  }
}

Matrix compute_radical(const AlgebraBuilder& b) {
  const FieldDesc& f = b.field;
  if (b.grading) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < b.dim; ++i)
      if ((*b.grading)[i] > 0) idx.push_back(i);
    return Matrix::identity(f, b.dim).cols_subset(idx);
  }
  if (!f.is_rationals() && f.p <= static_cast<std::int64_t>(b.dim)) {
    fail(ErrorCode::UnsupportedField, "trace-form radical needs characteristic 0 or p > dim (p = " +
                                          std::to_string(f.p) + ", dim = " + std::to_string(b.dim) + ")");
  }
  Matrix t(f, b.dim, b.dim);
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j) {
      Matrix p = b.left[i] * b.left[j];
      Rational tr(0);
      for (std::size_t k = 0; k < b.dim; ++k) tr = f.add(tr, p(k, k));
      t(i, j) = tr;
    }
  return kernel(t);
}

std::size_t nilpotency(const std::vector<Matrix>& left, const Matrix& rad, std::size_t dim) {
  const FieldDesc& f = rad.field();
  if (dim == 0) return 0;
  Matrix power = Matrix::identity(f, dim);
  for (std::size_t m = 0; m <= dim + 1; ++m) {
    if (rank(power) == 0) return m;
    std::vector<Matrix> parts;
    for (std::size_t c = 0; c < rad.cols(); ++c) parts.push_back(combine(left, rad.col(c)) * power);
    power = parts.empty() ? Matrix(f, dim, 0) : column_basis(Matrix::hstack(f, dim, parts));
  }
  fail(ErrorCode::Internal, "radical is not nilpotent");
}

void check_radical(const AlgebraBuilder& b, const Matrix& rad) {
  const FieldDesc& f = b.field;
  SubspaceCoords coords(column_basis(rad));
  for (std::size_t c = 0; c < rad.cols(); ++c) {
    Matrix j = rad.col(c);
    for (std::size_t i = 0; i < b.dim; ++i) {
      Matrix lj = b.left[i] * j;
      Matrix jl = combine(b.left, j) * unit(f, b.dim, i);
      require(coords.coords(lj).has_value() && coords.coords(jl).has_value(), ErrorCode::Internal,
              "radical is not a two-sided ideal");
    }
  }
  nilpotency(b.left, rad, b.dim);
}

Matrix corner(const AlgebraBuilder& b, const Matrix& e, const Matrix& span) {
  Matrix le = combine(b.left, e);
  std::vector<Matrix> cols;
  for (std::size_t c = 0; c < span.cols(); ++c) {
    Matrix x = le * span.col(c);          // e * x
    cols.push_back(combine(b.left, x) * e);  // (e x) e
  }
  if (cols.empty()) return Matrix(b.field, b.dim, 0);
  return column_basis(Matrix::hstack(b.field, b.dim, cols));
}

void validate_idempotents(const AlgebraBuilder& b, const Matrix& rad) {
  const FieldDesc& f = b.field;
  require(!b.idempotents.empty() || b.dim == 0, ErrorCode::BadIdempotents, "no idempotents supplied");
  Matrix sum(f, b.dim, 1);
  for (std::size_t i = 0; i < b.idempotents.size(); ++i) {
    const Matrix& e = b.idempotents[i];
    Matrix le = combine(b.left, e);
    require(le * e == e, ErrorCode::BadIdempotents, "idempotent " + std::to_string(i) + " is not idempotent");
    require(!e.is_zero(), ErrorCode::BadIdempotents, "zero idempotent");
    for (std::size_t j = 0; j < b.idempotents.size(); ++j) {
      if (i == j) continue;
      require((le * b.idempotents[j]).is_zero(), ErrorCode::BadIdempotents,
              "idempotents " + std::to_string(i) + " and " + std::to_string(j) + " are not orthogonal");
    }
    sum = sum + e;
    Matrix whole = corner(b, e, Matrix::identity(f, b.dim));
    Matrix rad_corner = corner(b, e, rad);
    require(whole.cols() == rad_corner.cols() + 1, ErrorCode::NotPrimitive,
            "corner algebra of idempotent " + std::to_string(i) + " is not local (dim " +
                std::to_string(whole.cols()) + ", radical dim " + std::to_string(rad_corner.cols()) + ")");
  }
  require(sum == b.one, ErrorCode::BadIdempotents, "idempotents do not sum to the identity");
}

}  // namespace

AlgebraPtr finalize_algebra(AlgebraBuilder& b) { return AlgebraBuilder::finalize(b); }

namespace {

std::vector<std::size_t> iso_reps(const AlgebraBuilder& b, const Matrix& rad) {
  // e_v ~ e_w iff e_w A e_v is not contained in J (and conversely).
  SubspaceCoords jc(column_basis(rad));
  auto linked = [&](std::size_t v, std::size_t w) {
    Matrix lw = combine(b.left, b.idempotents[w]);
    for (std::size_t i = 0; i < b.dim; ++i) {
      Matrix x = combine(b.left, lw * unit(b.field, b.dim, i)) * b.idempotents[v];
      if (!jc.coords(x).has_value()) return true;
    }
    return false;
  };
  std::vector<std::size_t> reps;
  for (std::size_t v = 0; v < b.idempotents.size(); ++v) {
    bool fresh = true;
    for (auto r : reps)
      if (linked(v, r) && linked(r, v)) fresh = false;
    if (fresh) reps.push_back(v);
  }
  return reps;
}

Matrix projective_basis_for(const std::vector<Matrix>& left, const Matrix& e, std::size_t dim) {
  // A e = span{b_i e}
  const FieldDesc& f = e.field();
  std::vector<Matrix> cols;
  for (std::size_t i = 0; i < dim; ++i) cols.push_back(left[i] * e);
  Matrix span = Matrix::hstack(f, dim, cols);
  Matrix rest = extend_basis(e, span);
  return Matrix::hstack(f, dim, {e, rest});
}

}  // namespace

AlgebraPtr AlgebraBuilder::finalize(AlgebraBuilder& b) {
  const FieldDesc& f = b.field;
  if (b.labels.empty()) {
    for (std::size_t i = 0; i < b.dim; ++i) b.labels.push_back("b" + std::to_string(i));
  }
  validate_table(b);
  Matrix rad = compute_radical(b);
  check_radical(b, rad);
  validate_idempotents(b, rad);

  auto build = [&](bool opp) {
    std::shared_ptr<Algebra> a(new Algebra());
    a->field_ = f;
    a->dim_ = b.dim;
    a->labels_ = b.labels;
    std::vector<Matrix> right(b.dim);
    for (std::size_t i = 0; i < b.dim; ++i) {
      Matrix r(f, b.dim, b.dim);
      for (std::size_t j = 0; j < b.dim; ++j)
        for (std::size_t k = 0; k < b.dim; ++k) r(k, j) = b.left[j](k, i);
      right[i] = std::move(r);
    }
    a->left_ = opp ? right : b.left;
    a->right_ = opp ? b.left : right;
    a->one_ = b.one;
    a->idempotents_ = b.idempotents;
    a->radical_ = rad;
    a->grading_ = b.grading;
    a->generators_ = b.generators;
    a->words_ = b.words;
    if (opp) {
      for (auto& w : a->words_) std::reverse(w.begin(), w.end());
    }
    a->presentation_ = b.presentation;
    a->is_opposite_ = opp;
    for (const auto& e : b.idempotents) a->proj_basis_.push_back(projective_basis_for(a->left_, e, b.dim));
    return a;
  };
  auto base = build(false);
  auto opp = build(true);
  auto reps = iso_reps(b, rad);
  base->reps_ = reps;
  opp->reps_ = reps;
  base->opposite_strong_ = opp;
  opp->opposite_weak_ = base;
  return base;
}

Matrix Algebra::product(const Matrix& x, const Matrix& y) const { return left_mult_by(x) * y; }

Matrix Algebra::left_mult_by(const Matrix& x) const { return combine(left_, x); }

Matrix Algebra::right_mult_by(const Matrix& x) const { return combine(right_, x); }

Matrix Algebra::basis_vector(std::size_t i) const { return unit(field_, dim_, i); }

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    if (left_[i] != right_[i]) return false;
  return true;
}

bool Algebra::same_table(const Algebra& o) const {
  return field_ == o.field_ && dim_ == o.dim_ && left_ == o.left_;
}

AlgebraPtr Algebra::opposite() const {
  if (opposite_strong_) return opposite_strong_;
  auto p = opposite_weak_.lock();
  require(p != nullptr, ErrorCode::Internal, "opposite algebra expired");
  return p;
}

std::string Algebra::describe() const {
  std::ostringstream os;
  os << "algebra over " << field_.name() << ", dim " << dim_ << (is_opposite_ ? " (opposite)" : "");
  return os.str();
}

AlgebraPtr opposite(const AlgebraPtr& a) { return a->opposite(); }

Matrix radical(const Algebra& a) { return a.radical(); }

std::vector<Matrix> primitive_idempotents(const Algebra& a) { return a.idempotents(); }

std::size_t radical_nilpotency_index(const Algebra& a) {
  std::vector<Matrix> left;
  for (std::size_t i = 0; i < a.dim(); ++i) left.push_back(a.left_mult(i));
  return nilpotency(left, a.radical(), a.dim());
}

// ---------------------------------------------------------------------------
// Table algebras

AlgebraPtr build_table_algebra(const TablePresentation& t, FieldDesc f) {
  AlgebraBuilder b;
  b.field = f;
  b.dim = t.dim;
  require(t.mul.size() == t.dim, ErrorCode::Validation, "mul table must have dim rows");
  for (std::size_t i = 0; i < t.dim; ++i) {
    require(t.mul[i].size() == t.dim, ErrorCode::Validation, "mul table row " + std::to_string(i) + " has wrong length");
    Matrix l(f, t.dim, t.dim);
    for (std::size_t j = 0; j < t.dim; ++j) {
      require(t.mul[i][j].size() == t.dim, ErrorCode::Validation,
              "mul table entry (" + std::to_string(i) + "," + std::to_string(j) + ") has wrong length");
      for (std::size_t k = 0; k < t.dim; ++k) l(k, j) = f.embed(t.mul[i][j][k]);
    }
    b.left.push_back(std::move(l));
  }
  require(t.one.size() == t.dim, ErrorCode::Validation, "identity vector has wrong length");
  b.one = Matrix::column(f, t.one);
  b.labels = t.labels;
  if (b.labels.empty()) {
    for (std::size_t i = 0; i < t.dim; ++i) b.labels.push_back("b" + std::to_string(i));
  }
  require(b.labels.size() == t.dim, ErrorCode::Validation, "labels have wrong length");
  if (t.idempotents.empty()) {
    b.idempotents.push_back(b.one);
  } else {
    for (const auto& e : t.idempotents) {
      require(e.size() == t.dim, ErrorCode::Validation, "idempotent has wrong length");
      b.idempotents.push_back(Matrix::column(f, e));
    }
  }
  for (std::size_t i = 0; i < t.dim; ++i) {
    b.generators.push_back({b.labels[i], unit(f, t.dim, i)});
    b.words.push_back({i});
  }
  b.presentation = t;
  return finalize_algebra(b);
}

// ---------------------------------------------------------------------------
// Graded quotients

namespace {

using SparseVec = std::map<std::size_t, Rational>;

void axpy(SparseVec& acc, const SparseVec& v, const Rational& c, const FieldDesc& f) {
  for (const auto& [k, x] : v) {
    Rational nv = f.add(acc[k], f.mul(c, x));
    if (nv.is_zero()) {
      acc.erase(k);
    } else {
      acc[k] = nv;
    }
  }
}

struct Path {
  std::size_t src = 0;
  std::size_t tgt = 0;
  std::vector<std::size_t> arrows;
};

class QuiverQuotient {
 public:
  QuiverQuotient(const QuiverPresentation& q, FieldDesc f) : q_(q), f_(f) {
    for (std::size_t i = 0; i < q.vertices.size(); ++i) vidx_[q.vertices[i]] = i;
    require(vidx_.size() == q.vertices.size(), ErrorCode::Validation, "duplicate vertex names");
    for (std::size_t i = 0; i < q.arrows.size(); ++i) {
      const auto& a = q.arrows[i];
      require(vidx_.count(a.source) && vidx_.count(a.target), ErrorCode::Validation,
              "arrow " + a.name + " has unknown endpoint");
      require(!aidx_.count(a.name) && !vidx_.count(a.name), ErrorCode::Validation, "duplicate generator name " + a.name);
      aidx_[a.name] = i;
      src_.push_back(vidx_[a.source]);
      tgt_.push_back(vidx_[a.target]);
    }
    require(q.degree_bound >= 2, ErrorCode::Validation, "degree_bound must be at least 2");
  }

  void run() {
    // Degree 0: vertices.
    std::vector<Path> q0;
    for (std::size_t v = 0; v < q_.vertices.size(); ++v) q0.push_back({v, v, {}});
    slices_.push_back(q0);
    tables_.push_back({});
    split_relations();
    std::vector<SparseVec> prev_kernel;  // relations among candidates of previous step
    std::vector<std::pair<std::size_t, std::size_t>> prev_cands;
    for (int n = 1;; ++n) {
      const auto& qprev = slices_.back();
      std::vector<std::pair<std::size_t, std::size_t>> cands;  // (index in qprev, arrow)
      for (std::size_t pi = 0; pi < qprev.size(); ++pi)
        for (std::size_t a = 0; a < q_.arrows.size(); ++a)
          if (src_[a] == qprev[pi].tgt) cands.push_back({pi, a});
      std::sort(cands.begin(), cands.end(), [&](auto x, auto y) {
        return name_seq(qprev[x.first], x.second) < name_seq(qprev[y.first], y.second);
      });
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> cindex;
      for (std::size_t i = 0; i < cands.size(); ++i) cindex[cands[i]] = i;

      auto to_cands = [&](const SparseVec& prev_vec, std::size_t arrow, const Rational& c, SparseVec& out) {
        for (const auto& [pi, x] : prev_vec) {
          if (qprev[pi].tgt != src_[arrow]) continue;
          axpy(out, SparseVec{{cindex.at({pi, arrow}), x}}, c, f_);
        }
      };

      std::vector<SparseVec> rows;
      // Prepend arrows to previous relations.
      for (const auto& k : prev_kernel) {
        for (std::size_t a = 0; a < q_.arrows.size(); ++a) {
          SparseVec row;
          for (const auto& [ci, x] : k) {
            const auto& [ppi, b] = prev_cands[ci];
            const Path& p = slices_[n - 2][ppi];
            if (tgt_[a] != p.src) continue;
            std::vector<std::size_t> seq{a};
            seq.insert(seq.end(), p.arrows.begin(), p.arrows.end());
            SparseVec head = normal_form(tgt_[a] == p.src ? src_[a] : src_[a], seq);
            to_cands(head, b, x, row);
          }
          if (!row.empty()) rows.push_back(row);
        }
      }
      for (const auto& rel : rels_) {
        if (rel.first != static_cast<std::size_t>(n)) continue;
        SparseVec row;
        for (const auto& [c, path] : rel.second) {
          std::vector<std::size_t> head(path.begin(), path.end() - 1);
          SparseVec hv = normal_form(src_[path.front()], head);
          to_cands(hv, path.back(), c, row);
        }
        if (!row.empty()) rows.push_back(row);
      }

      Matrix m(f_, rows.size(), cands.size());
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, x] : rows[r]) m(r, c) = x;
      RrefResult red = rref(m);
      std::vector<bool> is_pivot(cands.size(), false);
      for (auto p : red.pivot_cols) is_pivot[p] = true;
      std::vector<Path> qn;
      std::vector<std::size_t> free_index(cands.size(), 0);
      for (std::size_t c = 0; c < cands.size(); ++c) {
        if (is_pivot[c]) continue;
        free_index[c] = qn.size();
        const Path& p = qprev[cands[c].first];
        Path np{p.src, tgt_[cands[c].second], p.arrows};
        np.arrows.push_back(cands[c].second);
        qn.push_back(np);
      }
      std::map<std::pair<std::size_t, std::size_t>, SparseVec> table;
      for (std::size_t c = 0; c < cands.size(); ++c) {
        if (!is_pivot[c]) table[cands[c]] = SparseVec{{free_index[c], Rational(1)}};
      }
      prev_kernel.clear();
      for (std::size_t r = 0; r < red.rank; ++r) {
        SparseVec nf, krow;
        for (std::size_t c = 0; c < cands.size(); ++c) {
          const Rational& x = red.reduced(r, c);
          if (x.is_zero()) continue;
          krow[c] = x;
          if (!is_pivot[c]) nf[free_index[c]] = f_.neg(x);
        }
        table[cands[red.pivot_cols[r]]] = nf;
        prev_kernel.push_back(krow);
      }
      prev_cands = cands;
      if (qn.empty()) {
        top_degree_ = n - 1;
        break;
      }
      if (n >= q_.degree_bound) {
        fail(ErrorCode::NotNilpotentByBound,
             "quotient is nonzero in degree " + std::to_string(n) + " = degree_bound");
      }
      slices_.push_back(qn);
      tables_.push_back(table);
    }
  }

  // Normal form of the path starting at vertex `src` following `seq`, as a
  // vector over the standard paths of length seq.size().
  SparseVec normal_form(std::size_t src, const std::vector<std::size_t>& seq) const {
    SparseVec v{{src, Rational(1)}};
    for (std::size_t step = 0; step < seq.size(); ++step) {
      std::size_t len = step + 1;
      if (len >= slices_.size()) return {};
      SparseVec next;
      for (const auto& [pi, x] : v) {
        const Path& p = slices_[step][pi];
        if (p.tgt != src_[seq[step]]) continue;
        auto it = tables_[len].find({pi, seq[step]});
        if (it == tables_[len].end()) continue;
        axpy(next, it->second, x, f_);
      }
      v = std::move(next);
      if (v.empty()) return {};
    }
    return v;
  }

  AlgebraPtr finish() {
    AlgebraBuilder b;
    b.field = f_;
    std::vector<std::pair<std::size_t, std::size_t>> basis;  // (degree, index)
    for (std::size_t d = 0; d < slices_.size(); ++d)
      for (std::size_t i = 0; i < slices_[d].size(); ++i) basis.push_back({d, i});
    b.dim = basis.size();
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> bindex;
    for (std::size_t i = 0; i < basis.size(); ++i) bindex[basis[i]] = i;
    std::vector<int> grading;
    for (auto [d, i] : basis) {
      const Path& p = slices_[d][i];
      grading.push_back(static_cast<int>(d));
      if (d == 0) {
        b.labels.push_back(q_.vertices[p.src]);
      } else {
        std::string s;
        // label in algebra order: last arrow first
        for (std::size_t k = p.arrows.size(); k-- > 0;) s += (s.empty() ? "" : "*") + q_.arrows[p.arrows[k]].name;
        b.labels.push_back(s);
      }
    }
    for (std::size_t i = 0; i < b.dim; ++i) {
      Matrix l(f_, b.dim, b.dim);
      const Path& pi = slices_[basis[i].first][basis[i].second];
      for (std::size_t j = 0; j < b.dim; ++j) {
        const Path& pj = slices_[basis[j].first][basis[j].second];
        // b_i * b_j = path p_j followed by p_i
        if (pj.tgt != pi.src) continue;
        std::vector<std::size_t> seq = pj.arrows;
        seq.insert(seq.end(), pi.arrows.begin(), pi.arrows.end());
        SparseVec nf = normal_form(pj.src, seq);
        for (const auto& [k, x] : nf) l(bindex.at({seq.size(), k}), j) = x;
      }
      b.left.push_back(std::move(l));
    }
    b.one = Matrix(f_, b.dim, 1);
    for (std::size_t v = 0; v < q_.vertices.size(); ++v) {
      b.one(v, 0) = Rational(1);
      b.idempotents.push_back(unit(f_, b.dim, v));
    }
    for (std::size_t v = 0; v < q_.vertices.size(); ++v) b.generators.push_back({q_.vertices[v], unit(f_, b.dim, v)});
    for (std::size_t a = 0; a < q_.arrows.size(); ++a) {
      SparseVec nf = normal_form(src_[a], {a});
      Matrix e(f_, b.dim, 1);
      for (const auto& [k, x] : nf) e(bindex.at({1, k}), 0) = x;
      b.generators.push_back({q_.arrows[a].name, e});
    }
    for (auto [d, i] : basis) {
      const Path& p = slices_[d][i];
      std::vector<std::size_t> w;
      if (d == 0) {
        w.push_back(p.src);
      } else {
        for (std::size_t k = p.arrows.size(); k-- > 0;) w.push_back(q_.vertices.size() + p.arrows[k]);
      }
      b.words.push_back(w);
    }
    b.grading = grading;
    b.presentation = q_;
    return finalize_algebra(b);
  }

 private:
  std::vector<std::string> name_seq(const Path& p, std::size_t extra) const {
    std::vector<std::string> s;
    for (auto a : p.arrows) s.push_back(q_.arrows[a].name);
    s.push_back(q_.arrows[extra].name);
    return s;
  }

  void split_relations() {
    for (std::size_t r = 0; r < q_.relations.size(); ++r) {
      const auto& rel = q_.relations[r];
      std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<Rational, std::vector<std::size_t>>>> parts;
      std::size_t len = 0;
      for (std::size_t t = 0; t < rel.size(); ++t) {
        const auto& term = rel[t];
        require(!term.path.empty(), ErrorCode::InhomogeneousRelation,
                "relation " + std::to_string(r) + " contains a trivial path");
        if (t == 0) len = term.path.size();
        require(term.path.size() == len, ErrorCode::InhomogeneousRelation,
                "relation " + std::to_string(r) + " mixes path lengths");
        std::vector<std::size_t> seq;
        for (const auto& name : term.path) {
          require(aidx_.count(name), ErrorCode::Validation, "relation uses unknown arrow " + name);
          seq.push_back(aidx_.at(name));
        }
        for (std::size_t k = 1; k < seq.size(); ++k) {
          require(tgt_[seq[k - 1]] == src_[seq[k]], ErrorCode::Validation,
                  "relation " + std::to_string(r) + " contains a non-composable path");
        }
        Rational c = f_.embed(term.coeff);
        if (c.is_zero()) continue;
        parts[{src_[seq.front()], tgt_[seq.back()]}].push_back({c, seq});
      }
      require(len >= 2, ErrorCode::Validation,
              "relation " + std::to_string(r) + " has length < 2 (inadmissible relations are unsupported)");
      for (auto& [key, terms] : parts) rels_.push_back({len, terms});
    }
  }

  const QuiverPresentation& q_;
  FieldDesc f_;
  std::map<std::string, std::size_t> vidx_, aidx_;
  std::vector<std::size_t> src_, tgt_;
  std::vector<std::pair<std::size_t, std::vector<std::pair<Rational, std::vector<std::size_t>>>>> rels_;
  std::vector<std::vector<Path>> slices_;
  std::vector<std::map<std::pair<std::size_t, std::size_t>, SparseVec>> tables_;
  int top_degree_ = 0;
};

std::vector<std::vector<int>> monomials_of_degree(std::size_t nvars, int deg) {
  // Ordered by descending lexicographic exponent: x0^deg first.
  std::vector<std::vector<int>> out;
  std::vector<int> cur(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == nvars) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[i] = e;
      rec(i + 1, left - e);
    }
  };
  if (nvars == 0) {
    if (deg == 0) out.push_back({});
    return out;
  }
  rec(0, deg);
  return out;
}

AlgebraPtr build_commutative(const CommutativePresentation& c, FieldDesc f) {
  const std::size_t nv = c.variables.size();
  require(c.degree_bound >= 2, ErrorCode::Validation, "degree_bound must be at least 2");
  std::map<std::string, int> seen;
  for (const auto& v : c.variables) require(!seen[v]++, ErrorCode::Validation, "duplicate variable " + v);
  struct Rel {
    int deg;
    std::vector<std::pair<Rational, std::vector<int>>> terms;
  };
  std::vector<Rel> rels;
  for (std::size_t r = 0; r < c.relations.size(); ++r) {
    Rel rel{-1, {}};
    for (const auto& t : c.relations[r]) {
      require(t.exponents.size() == nv, ErrorCode::Validation,
              "relation " + std::to_string(r) + " has an exponent vector of wrong length");
      int d = 0;
      for (int e : t.exponents) {
        require(e >= 0, ErrorCode::Validation, "negative exponent");
        d += e;
      }
      if (rel.deg < 0) rel.deg = d;
      require(d == rel.deg, ErrorCode::InhomogeneousRelation, "relation " + std::to_string(r) + " mixes degrees");
      Rational x = f.embed(t.coeff);
      if (!x.is_zero()) rel.terms.push_back({x, t.exponents});
    }
    require(rel.deg >= 2 || rel.terms.empty(), ErrorCode::Validation,
            "relation " + std::to_string(r) + " has degree < 2 (unsupported)");
    if (!rel.terms.empty()) rels.push_back(rel);
  }

  std::vector<std::vector<std::vector<int>>> std_monos;                 // per degree
  std::vector<std::map<std::vector<int>, SparseVec>> nf_tables;          // per degree
  for (int n = 0;; ++n) {
    auto monos = monomials_of_degree(nv, n);
    std::map<std::vector<int>, std::size_t> midx;
    for (std::size_t i = 0; i < monos.size(); ++i) midx[monos[i]] = i;
    std::vector<SparseVec> rows;
    for (const auto& rel : rels) {
      if (rel.deg > n) continue;
      for (const auto& m : monomials_of_degree(nv, n - rel.deg)) {
        SparseVec row;
        for (const auto& [x, e] : rel.terms) {
          std::vector<int> s(nv);
          for (std::size_t i = 0; i < nv; ++i) s[i] = e[i] + m[i];
          axpy(row, SparseVec{{midx.at(s), x}}, Rational(1), f);
        }
        if (!row.empty()) rows.push_back(row);
      }
    }
    Matrix m(f, rows.size(), monos.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [col, x] : rows[r]) m(r, col) = x;
    RrefResult red = rref(m);
    std::vector<bool> is_pivot(monos.size(), false);
    for (auto p : red.pivot_cols) is_pivot[p] = true;
    std::vector<std::vector<int>> stdm;
    std::vector<std::size_t> free_index(monos.size());
    for (std::size_t i = 0; i < monos.size(); ++i) {
      if (is_pivot[i]) continue;
      free_index[i] = stdm.size();
      stdm.push_back(monos[i]);
    }
    if (stdm.empty()) break;
    if (n >= c.degree_bound) {
      fail(ErrorCode::NotNilpotentByBound, "quotient is nonzero in degree " + std::to_string(n) + " = degree_bound");
    }
    std::map<std::vector<int>, SparseVec> table;
    for (std::size_t i = 0; i < monos.size(); ++i)
      if (!is_pivot[i]) table[monos[i]] = SparseVec{{free_index[i], Rational(1)}};
    for (std::size_t r = 0; r < red.rank; ++r) {
      SparseVec nf;
      for (std::size_t col = 0; col < monos.size(); ++col)
        if (!is_pivot[col] && !red.reduced(r, col).is_zero()) nf[free_index[col]] = f.neg(red.reduced(r, col));
      table[monos[red.pivot_cols[r]]] = nf;
    }
    std_monos.push_back(stdm);
    nf_tables.push_back(table);
  }

  AlgebraBuilder b;
  b.field = f;
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  for (std::size_t d = 0; d < std_monos.size(); ++d)
    for (std::size_t i = 0; i < std_monos[d].size(); ++i) basis.push_back({d, i});
  b.dim = basis.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> bindex;
  for (std::size_t i = 0; i < basis.size(); ++i) bindex[basis[i]] = i;
  std::vector<int> grading;
  for (auto [d, i] : basis) {
    grading.push_back(static_cast<int>(d));
    const auto& e = std_monos[d][i];
    std::string s;
    for (std::size_t v = 0; v < nv; ++v) {
      if (e[v] == 0) continue;
      s += (s.empty() ? "" : "*") + c.variables[v] + (e[v] > 1 ? "^" + std::to_string(e[v]) : "");
    }
    b.labels.push_back(s.empty() ? "1" : s);
  }
  for (std::size_t i = 0; i < b.dim; ++i) {
    Matrix l(f, b.dim, b.dim);
    const auto& ei = std_monos[basis[i].first][basis[i].second];
    for (std::size_t j = 0; j < b.dim; ++j) {
      const auto& ej = std_monos[basis[j].first][basis[j].second];
      std::vector<int> s(nv);
      std::size_t deg = 0;
      for (std::size_t v = 0; v < nv; ++v) {
        s[v] = ei[v] + ej[v];
        deg += s[v];
      }
      if (deg >= nf_tables.size()) continue;
      for (const auto& [k, x] : nf_tables[deg].at(s)) l(bindex.at({deg, k}), j) = x;
    }
    b.left.push_back(std::move(l));
  }
  b.one = unit(f, b.dim, 0);
  b.idempotents.push_back(b.one);
  for (std::size_t v = 0; v < nv; ++v) {
    std::vector<int> e(nv, 0);
    e[v] = 1;
    Matrix g(f, b.dim, 1);
    if (nf_tables.size() > 1) {
      for (const auto& [k, x] : nf_tables[1].at(e)) g(bindex.at({1, k}), 0) = x;
    }
    b.generators.push_back({c.variables[v], g});
  }
  for (auto [d, i] : basis) {
    std::vector<std::size_t> w;
    const auto& e = std_monos[d][i];
    for (std::size_t v = 0; v < nv; ++v)
      for (int k = 0; k < e[v]; ++k) w.push_back(v);
    b.words.push_back(w);
  }
  b.grading = grading;
  b.presentation = c;
  return finalize_algebra(b);
}

}  // namespace

AlgebraPtr build_graded_quotient(const Presentation& p, FieldDesc f) {
  if (const auto* q = std::get_if<QuiverPresentation>(&p)) {
    QuiverQuotient qq(*q, f);
    qq.run();
    return qq.finish();
  }
  if (const auto* c = std::get_if<CommutativePresentation>(&p)) return build_commutative(*c, f);
  fail(ErrorCode::Validation, "build_graded_quotient needs a quiver or commutative presentation");
}

AlgebraPtr build_algebra(const Presentation& p, FieldDesc f) {
  if (const auto* t = std::get_if<TablePresentation>(&p)) return build_table_algebra(*t, f);
  return build_graded_quotient(p, f);
}

}  // namespace cotorkit
