#pragma once

// Finite-dimensional associative unital algebras given by structure constants.

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cotorkit/linalg.hpp"

namespace cotorkit {

struct QuiverArrow {
  std::string name;
  std::string source;
  std::string target;
};

struct PathTerm {
  Rational coeff;
  /// Arrow names in left-to-right composition order: [a, b] means "a, then b",
  /// i.e. the algebra element b*a acting on left modules.
  std::vector<std::string> path;
};

struct QuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<QuiverArrow> arrows;
  std::vector<std::vector<PathTerm>> relations;
  int degree_bound = 12;
};

struct MonomialTerm {
  Rational coeff;
  std::vector<int> exponents;
};

struct CommutativePresentation {
  std::vector<std::string> variables;
  std::vector<std::vector<MonomialTerm>> relations;
  int degree_bound = 12;
};

struct TablePresentation {
  std::size_t dim = 0;
  std::vector<std::string> labels;  // optional; defaults to b0, b1, ...
  /// mul[i][j][k] = coefficient of b_k in b_i * b_j
  std::vector<std::vector<std::vector<Rational>>> mul;
  std::vector<Rational> one;
  std::vector<std::vector<Rational>> idempotents;  // empty = {one}
};

using Presentation = std::variant<QuiverPresentation, CommutativePresentation, TablePresentation>;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A named generator for module input: each module is specified by the
/// action of these elements. Every basis element is a product of generators.
struct AlgebraGenerator {
  std::string name;
  Matrix element;  // dim x 1
};

class Algebra {
 public:
  const FieldDesc& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Left multiplication by basis element i: column j holds b_i * b_j.
  const Matrix& left_mult(std::size_t i) const { return left_[i]; }
  /// Right multiplication by basis element i: column j holds b_j * b_i.
  const Matrix& right_mult(std::size_t i) const { return right_[i]; }
  /// Coefficient of b_k in b_i * b_j.
  const Rational& mul(std::size_t i, std::size_t j, std::size_t k) const { return left_[i](k, j); }
  Matrix product(const Matrix& x, const Matrix& y) const;
  Matrix left_mult_by(const Matrix& x) const;
  Matrix right_mult_by(const Matrix& x) const;

  const Matrix& one() const { return one_; }
  Matrix basis_vector(std::size_t i) const;

  /// Complete set of orthogonal primitive idempotents.
  const std::vector<Matrix>& idempotents() const { return idempotents_; }
  /// One idempotent per isomorphism class of indecomposable projectives.
  const std::vector<std::size_t>& idempotent_representatives() const { return reps_; }
  /// Basis of the indecomposable projective A*e_v (columns, first column = e_v).
  const Matrix& projective_basis(std::size_t v) const { return proj_basis_[v]; }

  /// Columns span the Jacobson radical.
  const Matrix& radical() const { return radical_; }
  const std::optional<std::vector<int>>& grading() const { return grading_; }

  const std::vector<AlgebraGenerator>& generators() const { return generators_; }
  /// Each basis element as a product (in algebra order) of generator indices.
  const std::vector<std::vector<std::size_t>>& basis_words() const { return words_; }

  const Presentation& presentation() const { return presentation_; }
  bool is_opposite() const { return is_opposite_; }
  bool is_commutative() const;
  /// Structural equality of the multiplication tables.
  bool same_table(const Algebra& o) const;

  AlgebraPtr opposite() const;
  std::string describe() const;

  // Builders live in algebra.cpp; they construct both an algebra and its
  // opposite and link the pair.
  friend AlgebraPtr finalize_algebra(class AlgebraBuilder& b);

 private:
  Algebra() = default;

  FieldDesc field_;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Matrix> left_;
  std::vector<Matrix> right_;
  Matrix one_;
  std::vector<Matrix> idempotents_;
  std::vector<std::size_t> reps_;
  std::vector<Matrix> proj_basis_;
  Matrix radical_;
  std::optional<std::vector<int>> grading_;
  std::vector<AlgebraGenerator> generators_;
  std::vector<std::vector<std::size_t>> words_;
  Presentation presentation_;
  bool is_opposite_ = false;

  std::shared_ptr<const Algebra> opposite_strong_;
  std::weak_ptr<const Algebra> opposite_weak_;

  friend class AlgebraBuilder;
};

/// Validates associativity and identity exhaustively; idempotents must be
/// orthogonal, complete and primitive.
AlgebraPtr build_table_algebra(const TablePresentation& t, FieldDesc f);
/// Homogeneous quotient of a path algebra or a polynomial ring, computed
/// degree by degree until a zero slice appears.
AlgebraPtr build_graded_quotient(const Presentation& p, FieldDesc f);
AlgebraPtr build_algebra(const Presentation& p, FieldDesc f);

/// Columns span the radical. Uses the grading when present and the trace form
/// of the regular representation otherwise.
Matrix radical(const Algebra& a);
std::vector<Matrix> primitive_idempotents(const Algebra& a);
AlgebraPtr opposite(const AlgebraPtr& a);

/// Smallest m with J^m = 0 (J^0 = A).
std::size_t radical_nilpotency_index(const Algebra& a);

}  // namespace cotorkit
