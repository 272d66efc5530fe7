#pragma once

// Dense exact linear algebra over Q and prime fields.
//
// Convention: matrices act on the left of column coordinate vectors. Entry
// (i, j) is the coefficient of output basis vector i in the image of input
// basis vector j.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cotorkit/error.hpp"

namespace cotorkit {

/// Exact rational with an int64 fast path; promotes to GMP on overflow.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& o);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&&) noexcept = default;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  bool is_small() const { return !big_; }
  std::int64_t small_num() const { return num_; }
  std::int64_t small_den() const { return den_; }
  mpq_class to_mpq() const;
  int sign() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  /// "p/q" in lowest terms with q > 0; integers print without "/1".
  std::string str() const;
  /// Accepts "n", "-n", "p/q". Throws ParseError on malformed input or zero denominator.
  static Rational parse(const std::string& s);

 private:
  static Rational from_i128(__int128 n, __int128 d);
  void normalize_big();

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

/// Larger dense matrices throw ResourceLimit instead of exhausting memory.
inline constexpr std::size_t kMaxMatrixEntries = 80'000'000;

struct FieldDesc {
  enum class Kind { Rationals, PrimeField };
  Kind kind = Kind::Rationals;
  std::int64_t p = 0;

  static FieldDesc rationals() { return {}; }
  static FieldDesc prime(std::int64_t p);
  bool is_rationals() const { return kind == Kind::Rationals; }
  bool operator==(const FieldDesc& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const FieldDesc& o) const { return !(*this == o); }

  // Field operations. Over F_p scalars are integers in [0, p).
  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  Rational inv(const Rational& a) const;
  /// Maps an arbitrary rational into the field (reduces mod p).
  Rational embed(const Rational& a) const;
  Rational parse(const std::string& s) const { return embed(Rational::parse(s)); }
  std::string name() const;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldDesc f, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldDesc f, std::size_t n);
  static Matrix zero(FieldDesc f, std::size_t rows, std::size_t cols) { return {f, rows, cols}; }
  static Matrix from_rows(FieldDesc f, const std::vector<std::vector<Rational>>& rows);
  static Matrix from_ints(FieldDesc f, const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix column(FieldDesc f, const std::vector<Rational>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldDesc& field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rational& c) const;
  Matrix& add_scaled(const Matrix& o, const Rational& c);
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  bool is_zero() const;
  Matrix col(std::size_t j) const;
  std::vector<Rational> col_vec(std::size_t j) const;
  Matrix cols_subset(const std::vector<std::size_t>& idx) const;
  Matrix rows_subset(const std::vector<std::size_t>& idx) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  /// Column-stacked vectorization (vec(X)[i + j*rows] = X(i, j)).
  Matrix vec() const;
  static Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols);

  static Matrix hstack(FieldDesc f, std::size_t rows, const std::vector<Matrix>& parts);
  static Matrix vstack(FieldDesc f, std::size_t cols, const std::vector<Matrix>& parts);
  static Matrix block_diag(FieldDesc f, const std::vector<Matrix>& parts);

  std::string debug_string() const;

 private:
  FieldDesc field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  /// Columns span the right null space; rank + kernel.cols() == cols.
  Matrix kernel;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Matrix kernel(const Matrix& m);
/// Returns X with a * X == b (b may have several columns), or nullopt if inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
Matrix kronecker(const Matrix& a, const Matrix& b);
/// A maximal independent subset of the columns of m, in order.
Matrix column_basis(const Matrix& m);
/// Extends the columns of `base` (assumed independent) by columns of `extra`
/// not already in their span. Returns only the added columns.
Matrix extend_basis(const Matrix& base, const Matrix& extra);
/// Determinant of a square matrix.
Rational determinant(const Matrix& m);
/// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Coordinates with respect to a basis given as the (independent) columns of a
/// matrix. Precomputes a left inverse on pivot rows.
class SubspaceCoords {
 public:
  SubspaceCoords() = default;
  explicit SubspaceCoords(Matrix basis);
  const Matrix& basis() const { return basis_; }
  std::size_t dim() const { return basis_.cols(); }
  /// Coordinates of each column of v, or nullopt if some column is outside the span.
  std::optional<Matrix> coords(const Matrix& v) const;
  /// Like coords but throws InternalError if v is outside the span.
  Matrix coords_or_throw(const Matrix& v, const char* what) const;

 private:
  Matrix basis_;
  std::vector<std::size_t> pivot_rows_;
  Matrix left_inverse_;
};

/// Quotient V / W of a coordinate space by a subspace spanned by columns of w.
/// The quotient basis is the set of non-pivot coordinates of rref(w^T).
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(FieldDesc f, std::size_t ambient_dim, const Matrix& w);
  std::size_t dim() const { return projection_.rows(); }
  std::size_t ambient_dim() const { return projection_.cols(); }
  /// dim() x ambient_dim()
  const Matrix& projection() const { return projection_; }
  /// ambient_dim() x dim(); projection * section == identity
  const Matrix& section() const { return section_; }
  /// Basis of W (rows of rref(w^T), as columns).
  const Matrix& sub_basis() const { return sub_basis_; }

 private:
  Matrix projection_;
  Matrix section_;
  Matrix sub_basis_;
};

}  // namespace cotorkit
