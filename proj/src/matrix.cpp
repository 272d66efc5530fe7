#include <sstream>

#include "cotorkit/linalg.hpp"

namespace cotorkit {

namespace {

std::size_t checked_size(std::size_t rows, std::size_t cols) {
  if (cols != 0 && rows > kMaxMatrixEntries / cols)
    fail(ErrorCode::ResourceLimit, "a " + std::to_string(rows) + " x " + std::to_string(cols) +
                                       " matrix exceeds the limit of " + std::to_string(kMaxMatrixEntries) +
                                       " entries; try a smaller bound or length");
  return rows * cols;
}

}  // namespace

Matrix::Matrix(FieldDesc f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(checked_size(rows, cols)) {}

Matrix Matrix::identity(FieldDesc f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_rows(FieldDesc f, const std::vector<std::vector<Rational>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(f, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == c, ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.embed(rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_ints(FieldDesc f, const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return from_rows(f, r);
}

Matrix Matrix::column(FieldDesc f, const std::vector<Rational>& v) {
  Matrix m(f, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = f.embed(v[i]);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require(cols_ == o.rows_, ErrorCode::DimensionMismatch,
          "matrix product " + std::to_string(rows_) + "x" + std::to_string(cols_) + " * " +
              std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  require(field_ == o.field_, ErrorCode::FieldMismatch, "matrix product over different fields");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rational& b = o(k, j);
        if (b.is_zero()) continue;
        r(i, j) = field_.add(r(i, j), field_.mul(a, b));
      }
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r = *this;
  return r.add_scaled(o, Rational(1));
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r = *this;
  return r.add_scaled(o, field_.neg(Rational(1)));
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!data_[i].is_zero()) r.data_[i] = field_.mul(data_[i], c);
  }
  return r;
}

Matrix& Matrix::add_scaled(const Matrix& o, const Rational& c) {
  require(rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  if (c.is_zero()) return *this;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] = field_.add(data_[i], field_.mul(o.data_[i], c));
  }
  return *this;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && data_ == o.data_;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::col(std::size_t j) const {
  Matrix r(field_, rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) r(i, 0) = (*this)(i, j);
  return r;
}

std::vector<Rational> Matrix::col_vec(std::size_t j) const {
  std::vector<Rational> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::cols_subset(const std::vector<std::size_t>& idx) const {
  Matrix r(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) r(i, k) = (*this)(i, idx[k]);
  return r;
}

Matrix Matrix::rows_subset(const std::vector<std::size_t>& idx) const {
  Matrix r(field_, idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) r(k, j) = (*this)(idx[k], j);
  return r;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, ErrorCode::DimensionMismatch, "block out of range");
  Matrix r(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
  return r;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, ErrorCode::DimensionMismatch,
          "set_block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::vec() const {
  Matrix r(field_, rows_ * cols_, 1);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i) r(i + j * rows_, 0) = (*this)(i, j);
  return r;
}

Matrix Matrix::unvec(const Matrix& v, std::size_t rows, std::size_t cols) {
  require(v.rows() == rows * cols && v.cols() == 1, ErrorCode::DimensionMismatch, "unvec shape");
  Matrix r(v.field(), rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) r(i, j) = v(i + j * rows, 0);
  return r;
}

Matrix Matrix::hstack(FieldDesc f, std::size_t rows, const std::vector<Matrix>& parts) {
  std::size_t c = 0;
  for (const auto& p : parts) {
    require(p.rows() == rows, ErrorCode::DimensionMismatch, "hstack row mismatch");
    c += p.cols();
  }
  Matrix r(f, rows, c);
  std::size_t off = 0;
  for (const auto& p : parts) {
    r.set_block(0, off, p);
    off += p.cols();
  }
  return r;
}

Matrix Matrix::vstack(FieldDesc f, std::size_t cols, const std::vector<Matrix>& parts) {
  std::size_t rr = 0;
  for (const auto& p : parts) {
    require(p.cols() == cols, ErrorCode::DimensionMismatch, "vstack column mismatch");
    rr += p.rows();
  }
  Matrix r(f, rr, cols);
  std::size_t off = 0;
  for (const auto& p : parts) {
    r.set_block(off, 0, p);
    off += p.rows();
  }
  return r;
}

Matrix Matrix::block_diag(FieldDesc f, const std::vector<Matrix>& parts) {
  std::size_t rr = 0, cc = 0;
  for (const auto& p : parts) {
    rr += p.rows();
    cc += p.cols();
  }
  Matrix r(f, rr, cc);
  std::size_t ro = 0, co = 0;
  for (const auto& p : parts) {
    r.set_block(ro, co, p);
    ro += p.rows();
    co += p.cols();
  }
  return r;
}

std::string Matrix::debug_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).str();
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// In-place Gauss-Jordan elimination. Returns pivot columns.
std::vector<std::size_t> eliminate(Matrix& m, bool reduce_above) {
  const FieldDesc& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    }
    Rational inv = f.inv(m(r, c));
    nz.clear();
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (!m(r, j).is_zero()) {
        if (!inv.is_one()) m(r, j) = f.mul(m(r, j), inv);
        nz.push_back(j);
      }
    }
    for (std::size_t i = reduce_above ? 0 : r + 1; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational factor = m(i, c);
      for (std::size_t j : nz) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.reduced = m;
  res.pivot_cols = eliminate(res.reduced, true);
  res.rank = res.pivot_cols.size();
  const FieldDesc& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : res.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  res.kernel = Matrix(f, m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    res.kernel(fc, k) = Rational(1);
    for (std::size_t r = 0; r < res.rank; ++r) {
      const Rational& v = res.reduced(r, fc);
      if (!v.is_zero()) res.kernel(res.pivot_cols[r], k) = f.neg(v);
    }
  }
  return res;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  // Eliminate along the shorter side.
  Matrix w = m.rows() < m.cols() ? m : m.transpose();
  return eliminate(w, false).size();
}

Matrix kernel(const Matrix& m) { return rref(m).kernel; }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), ErrorCode::DimensionMismatch, "solve: row mismatch");
  const FieldDesc& f = a.field();
  Matrix aug = Matrix::hstack(f, a.rows(), {a, b});
  auto pivots = eliminate(aug, true);
  Matrix x(f, a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, a.cols() + j);
  }
  return x;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  require(a.field() == b.field(), ErrorCode::FieldMismatch, "kronecker over different fields");
  const FieldDesc& f = a.field();
  Matrix r(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (b(k, l).is_zero()) continue;
          r(i * b.rows() + k, j * b.cols() + l) = f.mul(x, b(k, l));
        }
    }
  return r;
}

Matrix column_basis(const Matrix& m) {
  Matrix w = m;
  auto pivots = eliminate(w, false);
  return m.cols_subset(pivots);
}

Matrix extend_basis(const Matrix& base, const Matrix& extra) {
  const FieldDesc& f = base.cols() ? base.field() : extra.field();
  std::size_t rows = base.cols() ? base.rows() : extra.rows();
  Matrix all = Matrix::hstack(f, rows, {base, extra});
  Matrix w = all;
  auto pivots = eliminate(w, false);
  std::vector<std::size_t> added;
  for (auto p : pivots)
    if (p >= base.cols()) added.push_back(p);
  return all.cols_subset(added);
}

Rational determinant(const Matrix& m) {
  require(m.rows() == m.cols(), ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const FieldDesc& f = m.field();
  Matrix w = m;
  Rational det(1);
  std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (!w(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == n) return Rational(0);
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w(piv, j), w(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, w(c, c));
    Rational inv = f.inv(w(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (w(i, c).is_zero()) continue;
      Rational factor = f.mul(w(i, c), inv);
      for (std::size_t j = c; j < n; ++j) w(i, j) = f.sub(w(i, j), f.mul(factor, w(c, j)));
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  require(m.rows() == m.cols(), ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  auto x = solve(m, Matrix::identity(m.field(), m.rows()));
  if (!x || rank(m) != m.rows()) return std::nullopt;
  return x;
}

// ---------------------------------------------------------------------------

SubspaceCoords::SubspaceCoords(Matrix basis) : basis_(std::move(basis)) {
  const FieldDesc& f = basis_.field();
  // Pivot rows of the basis = pivot columns of its transpose.
  Matrix t = basis_.transpose();
  auto pr = eliminate(t, false);
  require(pr.size() == basis_.cols(), ErrorCode::Internal, "SubspaceCoords: basis columns are dependent");
  pivot_rows_ = pr;
  Matrix square = basis_.rows_subset(pivot_rows_);
  auto inv = solve(square, Matrix::identity(f, square.rows()));
  require(inv.has_value(), ErrorCode::Internal, "SubspaceCoords: singular pivot block");
  left_inverse_ = *inv;
}

std::optional<Matrix> SubspaceCoords::coords(const Matrix& v) const {
  require(v.rows() == basis_.rows(), ErrorCode::DimensionMismatch, "coords: ambient dimension mismatch");
  if (basis_.cols() == 0) {
    if (!v.is_zero()) return std::nullopt;
    return Matrix(v.field(), 0, v.cols());
  }
  Matrix x = left_inverse_ * v.rows_subset(pivot_rows_);
  if (basis_ * x != v) return std::nullopt;
  return x;
}

Matrix SubspaceCoords::coords_or_throw(const Matrix& v, const char* what) const {
  auto c = coords(v);
  if (!c) fail(ErrorCode::Internal, std::string(what) + ": vector outside subspace");
  return *c;
}

QuotientSpace::QuotientSpace(FieldDesc f, std::size_t ambient_dim, const Matrix& w) {
  std::vector<std::size_t> pivots;
  Matrix red(f, 0, ambient_dim);
  if (w.cols() > 0) {
    red = w.transpose();
    pivots = eliminate(red, true);
  }
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < ambient_dim; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  projection_ = Matrix(f, free_cols.size(), ambient_dim);
  section_ = Matrix(f, ambient_dim, free_cols.size());
  std::vector<std::size_t> free_index(ambient_dim, 0);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    free_index[free_cols[k]] = k;
    projection_(k, free_cols[k]) = Rational(1);
    section_(free_cols[k], k) = Rational(1);
  }
  // v == sum_r v[p_r] * row_r  (mod W) is eliminated: v - sum v[p_r] row_r has
  // zero pivot entries, so pivot coordinate p_r projects to -row_r on free cols.
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t c : free_cols) {
      const Rational& x = red(r, c);
      if (!x.is_zero()) projection_(free_index[c], pivots[r]) = f.neg(x);
    }
  }
  sub_basis_ = red.rows_subset([&] {
                    std::vector<std::size_t> idx(pivots.size());
                    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
                    return idx;
                  }())
                   .transpose();
  if (pivots.empty()) sub_basis_ = Matrix(f, ambient_dim, 0);
}

}  // namespace cotorkit
