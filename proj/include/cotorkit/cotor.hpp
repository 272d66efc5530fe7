#pragma once

// Transpose, cotranspose, the evaluation maps theta and sigma, vanishing
// profiles, add C precovers and approximations relative to a semidualizing
// bimodule C.

#include <optional>
#include <string>
#include <vector>

#include "cotorkit/homology.hpp"

namespace cotorkit {

enum class ContextKind { Matlis, Regular, Custom };

struct SemidualizingContext {
  AlgebraPtr r, s;
  std::shared_ptr<const Bimodule> c;
  ContextKind kind = ContextKind::Custom;
  std::size_t verified_bound = 0;
  Matrix left_homothety;   // R -> Hom_S(C, C), in a Hom basis
  Matrix right_homothety;  // S -> Hom_R(C, C)

  const ModulePtr& c_left() const { return c->left_module(); }
  const ModulePtr& c_right() const { return c->right_module(); }
};
using ContextPtr = std::shared_ptr<const SemidualizingContext>;

/// Checks the homothety maps and Ext^{1..bound}(C, C) = 0 on both sides.
ContextPtr make_context(const Bimodule& c, std::size_t bound, ContextKind kind = ContextKind::Custom);
ContextPtr matlis_context(const AlgebraPtr& a, std::size_t bound);
/// C = A for a commutative algebra A.
ContextPtr regular_context(const AlgebraPtr& a, std::size_t bound);

// ---------------------------------------------------------------------------

enum class TransposeMode {
  Minimal,
  /// Mutation for harness testing: the last relation of P_1 is dropped.
  DropRelation,
};

/// Tr_C M = Coker(f0^*) for the minimal presentation P1 -> P0 -> M; a right S-module.
ModulePtr transpose(const ModulePtr& m, const SemidualizingContext& ctx, TransposeMode mode = TransposeMode::Minimal);
/// cTr_C M = Coker((f^0)_*) for the minimal injective copresentation; a left S-module.
ModulePtr cotranspose(const ModulePtr& m, const SemidualizingContext& ctx);

/// M_* = Hom_R(C, M) as a left S-module, and M^* = Hom_R(M, C) as a right S-module.
HomModule lower_star(const ModulePtr& m, const SemidualizingContext& ctx);
HomModule upper_star(const ModulePtr& m, const SemidualizingContext& ctx);

struct CanonicalMaps {
  TensorProduct c_tensor;  // C (x)_S M_*
  HomModule m_lower;       // M_*
  HomModule m_upper;       // M^*
  HomModule m_double;      // M^**
  ModuleHom theta;         // C (x) M_* -> M
  ModuleHom sigma;         // M -> M^**
};
CanonicalMaps canonical_maps(const ModulePtr& m, const SemidualizingContext& ctx);
ModuleHom theta_map(const ModulePtr& m, const SemidualizingContext& ctx);
ModuleHom sigma_map(const ModulePtr& m, const SemidualizingContext& ctx);

// ---------------------------------------------------------------------------

/// dim Ext^i_S(X, C) for a right S-module X, i in [from, to].
std::vector<std::size_t> ext_into_c(const ModulePtr& x, const SemidualizingContext& ctx, std::size_t from,
                                    std::size_t to, bool stop_at_nonzero = false);
/// dim Tor_i^S(C, N) for a left S-module N.
std::vector<std::size_t> tor_with_c(const ModulePtr& n, const SemidualizingContext& ctx, std::size_t from,
                                    std::size_t to, bool stop_at_nonzero = false);
/// dim Ext^i_R(C, M), computed as dim Tor_i(D M, C) over R^op.
std::vector<std::size_t> ext_from_c(const ModulePtr& m, const SemidualizingContext& ctx, std::size_t from,
                                    std::size_t to, bool stop_at_nonzero = false);
/// Ext^i_R(C, M) as a left S-module.
ModulePtr ext_from_c_module(const ModulePtr& m, const SemidualizingContext& ctx, std::size_t i);

struct Cograde {
  std::optional<std::size_t> value;  // nullopt: all Tor_0..Tor_bound vanish
  std::size_t bound = 0;
  bool at_least(std::size_t k) const { return !value || *value >= k; }
  std::string str() const;
};
Cograde cograde(const ModulePtr& n, const SemidualizingContext& ctx, std::size_t bound);

struct VanishingProfile {
  std::size_t bound = 0;
  std::size_t torsionfree_up_to = 0;
  std::size_t cotorsionfree_up_to = 0;
  std::size_t cospherical_up_to = 0;
  std::optional<Cograde> cograde;  // only when R = S
  bool theta_epi = false, theta_iso = false;
  bool sigma_mono = false, sigma_iso = false;

  bool torsionfree_through_bound() const { return torsionfree_up_to == bound; }
  bool cotorsionfree_through_bound() const { return cotorsionfree_up_to == bound; }
  bool cospherical_through_bound() const { return cospherical_up_to == bound; }
};
/// Throws InternalInconsistency when the theta route disagrees with the Tor route.
VanishingProfile vanishing_profile(const ModulePtr& m, const SemidualizingContext& ctx, std::size_t bound);
std::size_t torsionfree_level(const ModulePtr& m, const SemidualizingContext& ctx, std::size_t bound);
std::size_t cotorsionfree_level(const ModulePtr& m, const SemidualizingContext& ctx, std::size_t bound);
std::size_t cospherical_level(const ModulePtr& m, const SemidualizingContext& ctx, std::size_t bound);

struct BassReport {
  std::size_t bound = 0;
  bool ext_vanishes = false;  // (B1)
  bool tor_vanishes = false;  // (B2)
  bool theta_iso = false;     // (B3)
  bool in_class() const { return ext_vanishes && tor_vanishes && theta_iso; }
};
BassReport in_bass_class(const ModulePtr& m, const SemidualizingContext& ctx, std::size_t bound);

// ---------------------------------------------------------------------------

struct AddCPrecover {
  ModulePtr w;      // C^t
  std::size_t copies = 0;
  ModuleHom map;    // W -> M
  bool hom_surjective = false;
  bool epi = false;
};
AddCPrecover addc_precover(const ModulePtr& m, const SemidualizingContext& ctx);

struct ProperAddCResolution {
  bool success = false;
  std::size_t failed_step = 0;       // index of the first precover that is not epi
  std::vector<AddCPrecover> steps;   // W_i -> K_i with K_0 = M
  std::vector<SubModule> kernels;    // K_{i+1} inside W_i
  std::vector<ModuleHom> maps;       // W_{i+1} -> W_i
};
ProperAddCResolution proper_addc_resolution(const ModulePtr& m, const SemidualizingContext& ctx, std::size_t n);

/// 0 -> Y -> W^0 -> ... -> W^k -> 0 with every W^j in add C.
struct AddCCoresolution {
  ModulePtr y;
  ModuleHom start;               // Y -> W^0
  std::vector<ModulePtr> terms;  // W^j
  std::vector<ModuleHom> maps;   // W^j -> W^{j+1}
  std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
};

enum class ApproxMode { Standard, BoundedInfinity };

struct ApproxCheck {
  bool exact = false;
  bool x_condition = false;  // Ext^{1..n}(C, X) = 0, or X cotorsionfree through the bound
  bool y_coresolution = false;
  std::string detail;
  bool ok() const { return exact && x_condition && y_coresolution; }
};

struct Approximation {
  ModulePtr x, y;
  ModuleHom m_to_x, x_to_y;
  AddCCoresolution y_certificate;
  std::size_t n = 0;
  ApproxMode mode = ApproxMode::Standard;
  std::vector<std::string> trace;  // one line per verified intermediate diagram
};
/// 0 -> M -> X -> Y -> 0 with X n-C-cospherical and add C-id Y <= n-1, built by
/// iterated pullbacks. Throws PreconditionFailed unless coOmega^n(M) is n-C-cotorsionfree.
Approximation build_approximation(const ModulePtr& m, const SemidualizingContext& ctx, std::size_t n,
                                  ApproxMode mode = ApproxMode::Standard);
/// Membership in add C: theta_W is an isomorphism and Hom(C, W) is projective.
bool in_add_c(const ModulePtr& w, const SemidualizingContext& ctx);
ApproxCheck verify_approximation(const Approximation& a, const ModulePtr& m, const SemidualizingContext& ctx);

// ---------------------------------------------------------------------------

struct GorensteinInjectiveReport {
  std::size_t bound = 0;
  bool through_bound = false;
  bool dual_route = false;  // D(M) torsionfree with Ext^{1..b}(D M, A) = 0
  std::string str() const;
};
/// Needs the Matlis context.
GorensteinInjectiveReport is_gorenstein_injective(const ModulePtr& m, const SemidualizingContext& ctx,
                                                  std::size_t bound);

struct BoundedDimension {
  std::optional<std::size_t> value;  // nullopt: > bound
  std::size_t bound = 0;
  std::string str() const;
};
BoundedDimension injective_dimension_bounded(const ModulePtr& m, std::size_t bound);
struct GorensteinBound {
  BoundedDimension left, right;
  bool gorenstein() const { return left.value && right.value; }
};
GorensteinBound gorenstein_bounded(const AlgebraPtr& a, std::size_t bound);

// ---------------------------------------------------------------------------

struct InvariantReport {
  std::string module_id;
  std::string context_label;  // "matlis", "regular" or a bimodule path
  std::size_t bound = 0;
  VanishingProfile profile;
  BassReport bass;
  /// Decided with the Matlis context of the module's algebra, whatever C is.
  GorensteinInjectiveReport gorenstein;
  bool injective = false;
};
InvariantReport invariant_report(const ModulePtr& m, const SemidualizingContext& ctx, std::size_t bound,
                                 const std::string& module_id, const std::string& context_label);

}  // namespace cotorkit
