#pragma once

// Projective covers, injective envelopes, minimal resolutions, Ext and Tor.

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cotorkit/module.hpp"

namespace cotorkit {

/// P = (+)_j A e_{v_j}, coordinates in the blocks A->projective_basis(v_j).
class ProjSum {
 public:
  ProjSum() = default;
  ProjSum(AlgebraPtr acting, Side side, std::vector<std::size_t> vertices);

  const AlgebraPtr& acting() const { return acting_; }
  Side side() const { return side_; }
  const std::vector<std::size_t>& vertices() const { return vertex_; }
  std::size_t summands() const { return vertex_.size(); }
  std::size_t offset(std::size_t j) const { return offset_[j]; }
  std::size_t block_dim(std::size_t j) const;
  std::size_t dim() const { return dim_; }

  /// element * vecs, computed block by block.
  Matrix act(const Matrix& element, const Matrix& vecs) const;
  /// The algebra element in A e_{v_j} represented by block j of column c of vecs.
  Matrix block_element(const Matrix& vecs, std::size_t c, std::size_t j) const;
  /// The module, built on first use.
  ModulePtr module() const;

 private:
  AlgebraPtr acting_;
  Side side_ = Side::Left;
  std::vector<std::size_t> vertex_;
  std::vector<std::size_t> offset_;
  std::size_t dim_ = 0;
  std::vector<ModulePtr> blocks_;  // A e_v per summand
  struct Lazy {
    std::once_flag once;
    ModulePtr module;
  };
  std::shared_ptr<Lazy> lazy_ = std::make_shared<Lazy>();
};

struct ProjectiveCover {
  ProjSum proj;
  ModulePtr p;
  ModuleHom epi;
};
ProjectiveCover projective_cover(const ModulePtr& m);

struct InjectiveEnvelope {
  ModulePtr i;
  ModuleHom mono;
  std::vector<std::size_t> vertices;  // I = (+) D(e_v A)
};
InjectiveEnvelope injective_envelope(const ModulePtr& m);

enum class ResolutionSide { Projective, Injective };

/// Projective side: P_len -> ... -> P_1 -> P_0 -> M -> 0.
/// Injective side: 0 -> M -> I^0 -> ... -> I^len, stored as the dual of the
/// projective resolution of D(M) over the opposite algebra.
class Resolution {
 public:
  ResolutionSide side = ResolutionSide::Projective;
  ModulePtr module;
  std::vector<ProjSum> proj;  // P_i (projective side) or P_i(DM) (injective side)
  /// Projective: d[i] : P_{i+1} -> P_i. Injective: d[i] : I^i -> I^{i+1}.
  std::vector<Matrix> d;
  Matrix augmentation;  // P_0 -> M or M -> I^0
  bool minimal = true;
  std::optional<std::size_t> zero_from;  // first index whose term is zero
  Matrix pending_kernel;                 // kernel of the last projective map, for extension

  std::size_t length() const { return proj.empty() ? 0 : proj.size() - 1; }
  std::size_t term_dim(std::size_t i) const { return proj[i].dim(); }
  ModulePtr term(std::size_t i) const;
  ModuleHom map(std::size_t i) const;  // projective: P_{i+1} -> P_i; injective: I^i -> I^{i+1}
  ModuleHom augmentation_hom() const;
  /// Betti numbers (projective) or Bass numbers (injective): summand counts.
  std::vector<std::size_t> multiplicities() const;

 private:
  mutable std::vector<ModulePtr> term_cache_;
};

Resolution min_resolution(const ModulePtr& m, ResolutionSide side, std::size_t length);
/// Extends a projective resolution in place up to the given length.
void extend_resolution(Resolution& r, std::size_t length);

struct ResolutionCheck {
  bool complex = true;
  bool exact = true;
  bool minimal = true;
  std::string detail;
  bool ok() const { return complex && exact && minimal; }
};
ResolutionCheck verify_resolution(const Resolution& r);

ModulePtr syzygy(const ModulePtr& m, std::size_t n);
ModulePtr cosyzygy(const ModulePtr& m, std::size_t n);

struct Cosyzygy {
  ModulePtr module;
  std::optional<ModuleHom> epi;  // I^{n-1} -> coOmega^n (absent for n = 0)
  ModuleHom mono;                // coOmega^n -> I^n
};
/// coOmega^n as the image of d^{n-1}; needs r.length() >= n.
Cosyzygy cosyzygy_of(const Resolution& r, std::size_t n);

// ---------------------------------------------------------------------------
// Ext and Tor through projective resolutions.

/// dim Ext^i(M, N) for i in [from, to]; P is a projective resolution of M of
/// length >= to + 1. If stop_at_nonzero, stops after the first nonzero value.
std::vector<std::size_t> ext_dims(const Resolution& p, const ModulePtr& n, std::size_t from, std::size_t to,
                                  bool stop_at_nonzero = false);
/// dim Tor_i(X, N) for a right module X and a projective resolution of N.
std::vector<std::size_t> tor_dims(const ModulePtr& x, const Resolution& p, std::size_t from, std::size_t to,
                                  bool stop_at_nonzero = false);

/// Same values, resolving whichever side terminates or grows more slowly:
/// Ext^i(M, N) = dim Tor_i(M, D N) and Tor_i(X, N) = Tor_i over the opposite algebra.
std::vector<std::size_t> ext_dims_balanced(const ModulePtr& m, const ModulePtr& n, std::size_t from, std::size_t to,
                                           bool stop_at_nonzero = false);
std::vector<std::size_t> tor_dims_balanced(const ModulePtr& x, const ModulePtr& n, std::size_t from, std::size_t to,
                                           bool stop_at_nonzero = false);

std::size_t ext_dim(const ModulePtr& m, const ModulePtr& n, std::size_t i);
std::size_t tor_dim(const ModulePtr& x, const ModulePtr& n, std::size_t i);

/// Matrix of Hom(d, N) : Hom(P_i, N) -> Hom(P_{i+1}, N) in the bases (+) e_v N.
Matrix hom_differential(const ProjSum& src, const ProjSum& dst, const Matrix& d, const ModulePtr& n);
/// Matrix of X (x) d : X (x) P_{i+1} -> X (x) P_i in the bases (+) X e_v.
Matrix tensor_differential(const ProjSum& src, const ProjSum& dst, const Matrix& d, const ModulePtr& x);

/// Basis of e_v N: the independent columns of the action of e_v, in order.
Matrix corner_basis(const Module& n, std::size_t v);
/// (+)_j e_{v_j} N, in the bases corner_basis, as a module over `acting` where
/// basis element i acts on N by ops[i] (ops must preserve each e_v N).
ModulePtr corner_sum(const ProjSum& p, const Module& n, const AlgebraPtr& acting, Side side,
                     const std::vector<Matrix>& ops);

/// The module ker(out) / im(in) for composable maps in -> T -> out.
ModulePtr homology_module(const ModuleHom& in, const ModuleHom& out);
/// Tor_i(C, N) with its left R-structure (C an (R,S)-bimodule).
ModulePtr tor_module(const Bimodule& c, const Resolution& p, std::size_t i);

/// Ext^i(M, N) from an injective coresolution of N, via generic Hom spaces.
std::size_t ext_dim_injective(const ModulePtr& m, const Resolution& inj, std::size_t i);
/// Ext^i(M, N) from any projective resolution (not necessarily minimal), via generic Hom spaces.
std::size_t ext_dim_generic(const Resolution& p, const ModulePtr& n, std::size_t i);
/// A non-minimal projective resolution: adds a split summand A e_v -> A e_v in degrees (k+1, k).
Resolution pad_resolution(const Resolution& r, std::size_t k, std::size_t v);

// ---------------------------------------------------------------------------

struct Pullback {
  ModulePtr p;
  ModuleHom to_x, to_y;
};
Pullback pullback(const ModuleHom& f, const ModuleHom& g);

struct Pushout {
  ModulePtr q;
  ModuleHom from_x, from_y;
};
Pushout pushout(const ModuleHom& f, const ModuleHom& g);

/// terms[0] -> terms[1] -> ... with maps[i] : terms[i] -> terms[i+1]; zero beyond both ends.
struct Complex {
  std::vector<ModulePtr> terms;
  std::vector<ModuleHom> maps;
};
struct ExactnessResult {
  bool exact = true;
  std::size_t defect = 0;  // dim ker(out) - rank(in)
};
ExactnessResult is_exact_at(const Complex& c, std::size_t pos);
bool is_complex(const Complex& c);

}  // namespace cotorkit
