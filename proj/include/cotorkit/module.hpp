#pragma once

// Finite-dimensional modules, bimodules and module maps.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cotorkit/algebra.hpp"

namespace cotorkit {

enum class Side { Left, Right };

inline const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

class Module;
using ModulePtr = std::shared_ptr<const Module>;

/// Data of the projective cover P = (+)_j A e_{v_j} -> M, a e_{v_j} |-> a y_j.
struct CoverData {
  std::vector<std::size_t> vertex;      // v_j per generator
  Matrix gens;                          // dim M x t, column j = y_j
  std::vector<std::size_t> offset;      // block offsets inside P
  std::size_t pdim = 0;
  Matrix epi;                           // dim M x pdim
  Matrix section;                       // pdim x dim M, epi * section = id
  Matrix kernel;                        // pdim x k, basis of ker(epi)
};

/// A left module over `acting()`. A right module over A is stored as a left
/// module over A^op with side() == Right.
class Module {
 public:
  Module(AlgebraPtr acting, Side side, std::vector<Matrix> action, std::size_t dim);

  const AlgebraPtr& acting() const { return acting_; }
  /// The algebra the module is a (left or right) module over.
  AlgebraPtr algebra() const { return side_ == Side::Left ? acting_ : acting_->opposite(); }
  Side side() const { return side_; }
  std::size_t dim() const { return dim_; }
  const FieldDesc& field() const { return acting_->field(); }
  const Matrix& action(std::size_t i) const { return action_[i]; }
  const std::vector<Matrix>& actions() const { return action_; }
  /// Action of an arbitrary element of the acting algebra (dim x 1 coefficients).
  Matrix act(const Matrix& element) const;

  /// Exhaustive check of unitality and multiplicativity on basis pairs.
  void validate() const;
  /// Columns span J*M.
  const Matrix& radical_image() const;
  /// Columns span soc M = {m : J m = 0}.
  Matrix socle() const;
  const CoverData& cover_data() const;

  /// Same actions viewed over another algebra with an identical table.
  Module reinterpret(AlgebraPtr acting, Side side) const;

 private:
  AlgebraPtr acting_;
  Side side_;
  std::size_t dim_;
  std::vector<Matrix> action_;

  struct Cache {
    std::once_flag rad_once, cover_once;
    Matrix rad;
    CoverData cover;
  };
  std::shared_ptr<Cache> cache_;
};

bool same_category(const Module& a, const Module& b);
void require_same_category(const Module& a, const Module& b, const char* what);

struct ModuleHom {
  ModulePtr source;
  ModulePtr target;
  Matrix matrix;  // target.dim x source.dim

  void validate() const;
  bool is_injective() const { return rank(matrix) == source->dim(); }
  bool is_surjective() const { return rank(matrix) == target->dim(); }
};

ModuleHom compose(const ModuleHom& g, const ModuleHom& f);  // g o f
ModuleHom identity_hom(const ModulePtr& m);
ModuleHom zero_hom(const ModulePtr& s, const ModulePtr& t);

/// An (R,S)-bimodule. ract[s] is the matrix of c |-> c*s, so ract(s1 s2) = ract(s2) ract(s1).
class Bimodule {
 public:
  Bimodule(AlgebraPtr r, AlgebraPtr s, std::size_t dim, std::vector<Matrix> lact, std::vector<Matrix> ract);

  const AlgebraPtr& left_algebra() const { return r_; }
  const AlgebraPtr& right_algebra() const { return s_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& left_actions() const { return lact_; }
  const std::vector<Matrix>& right_actions() const { return ract_; }

  /// C as a left R-module.
  const ModulePtr& left_module() const { return left_; }
  /// C as a right S-module.
  const ModulePtr& right_module() const { return right_; }
  /// The same space as an (S^op, R^op)-bimodule.
  Bimodule flipped() const;
  void validate() const;

 private:
  AlgebraPtr r_, s_;
  std::size_t dim_;
  std::vector<Matrix> lact_, ract_;
  ModulePtr left_, right_;
};

/// D(A) = Hom_k(A, k) with its canonical (A, A)-bimodule structure.
Bimodule matlis_bimodule(const AlgebraPtr& a);
/// A as an (A, A)-bimodule.
Bimodule regular_bimodule(const AlgebraPtr& a);

// ---------------------------------------------------------------------------

/// Builds a module from the actions of the algebra's generators; the action
/// is extended multiplicatively and verified.
ModulePtr make_module(const AlgebraPtr& a, Side side, std::size_t dim, const std::map<std::string, Matrix>& gens);
ModulePtr module_from_actions(const AlgebraPtr& acting, Side side, std::vector<Matrix> action);

struct StructuralModules {
  ModulePtr regular;
  std::vector<ModulePtr> projectives;  // one per idempotent
  std::vector<ModulePtr> simples;      // tops of the projectives
};
StructuralModules structural_modules(const AlgebraPtr& a, Side side = Side::Left);
ModulePtr zero_module(const AlgebraPtr& acting, Side side);
/// A e_v for the idempotent with index v (left modules); e_v A for right modules.
ModulePtr indecomposable_projective(const AlgebraPtr& acting, Side side, std::size_t v);

ModulePtr matlis_dual(const ModulePtr& m);
/// D(f): D(target) -> D(source).
ModuleHom matlis_dual(const ModuleHom& f, const ModulePtr& dsource, const ModulePtr& dtarget);

struct DirectSum {
  ModulePtr sum;
  std::vector<ModuleHom> injections;
  std::vector<ModuleHom> projections;
};
DirectSum direct_sum(const std::vector<ModulePtr>& ms, const AlgebraPtr& acting = nullptr, Side side = Side::Left);
ModuleHom direct_sum_map(const std::vector<std::vector<Matrix>>& blocks, const ModulePtr& src, const ModulePtr& tgt);

struct SubModule {
  ModulePtr module;
  ModuleHom inclusion;
};
struct QuotientModule {
  ModulePtr module;
  ModuleHom projection;
  Matrix section;  // dim(parent) x dim(quotient), linear only
};
SubModule submodule(const ModulePtr& m, const Matrix& span);
QuotientModule quotient_module(const ModulePtr& m, const Matrix& span);

struct Subquotients {
  SubModule kernel;
  SubModule image;
  ModuleHom coimage;  // source -> image
  QuotientModule cokernel;
};
Subquotients subquotients(const ModuleHom& h);

// ---------------------------------------------------------------------------

/// Hom_A(M, N) with a basis of intertwiners and a coordinate solver.
class HomSpace {
 public:
  HomSpace(ModulePtr m, ModulePtr n);
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Matrix>& basis() const { return basis_; }
  const ModulePtr& source() const { return m_; }
  const ModulePtr& target() const { return n_; }
  /// Coordinates of a homomorphism in the basis (dim x 1).
  Matrix coords(const Matrix& phi) const;
  /// Sum of coefficient * basis.
  Matrix element(const Matrix& coeffs) const;

 private:
  ModulePtr m_, n_;
  std::vector<Matrix> basis_;
  std::vector<Matrix> target_blocks_;  // basis of e_{v_j} N per generator
  Matrix param_basis_;                 // stacked parameters of each basis element
  std::optional<SubspaceCoords> param_coords_;
};

enum class HomVariant {
  FromC,  // Hom_R(C, M): left S-module, (s f)(c) = f(c s)
  IntoC,  // Hom_R(M, C): right S-module, (f s)(m) = f(m) s
};

struct HomModule {
  ModulePtr module;
  std::shared_ptr<const HomSpace> space;
};
HomModule hom_module(const Bimodule& c, const ModulePtr& m, HomVariant v);
/// Hom_R(C, phi) : Hom(C, M) -> Hom(C, M').
ModuleHom hom_covariant(const HomModule& src, const HomModule& dst, const ModuleHom& phi);
/// Hom_R(phi, C) : Hom(M', C) -> Hom(M, C) for phi : M -> M'.
ModuleHom hom_contravariant(const HomModule& src, const HomModule& dst, const ModuleHom& phi);

struct TensorProduct {
  ModulePtr module;       // carries the left action when x is a bimodule, else over the field
  std::size_t dim = 0;
  Matrix projection;      // dim x (dim X * dim N)
  Matrix section;         // (dim X * dim N) x dim
  std::size_t xdim = 0, ndim = 0;
};
/// X (x)_S N for a right S-module X and a left S-module N.
TensorProduct tensor(const ModulePtr& x, const ModulePtr& n);
/// C (x)_S N with its left R-structure.
TensorProduct tensor(const Bimodule& c, const ModulePtr& n);
/// Matrix of f (x) g : src -> dst.
Matrix tensor_map(const TensorProduct& src, const TensorProduct& dst, const Matrix& f, const Matrix& g);

enum class IsoVerdict { Isomorphic, NotIsomorphic, Undecided };
struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Undecided;
  std::optional<Matrix> witness;
  std::string certificate;
};
IsoResult iso_test(const ModulePtr& m, const ModulePtr& n, std::mt19937_64& rng);

}  // namespace cotorkit
