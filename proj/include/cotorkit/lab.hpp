#pragma once

// Seeded random instances and executable checks of the cotorsionfree theory.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cotorkit/cotor.hpp"
#include "cotorkit/io.hpp"

namespace cotorkit {

struct SuiteConfig {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  /// Optional cap on the number of instances a check runs on.
  std::map<std::string, std::size_t> per_check;
  std::size_t max_algebra_dim = 6;
  std::size_t max_module_dim = 8;
  std::size_t bound = 6;
  FieldDesc field = FieldDesc::rationals();
  /// Mutation mode: Tr is built from a presentation missing one relation.
  bool corrupt = false;
  /// Empty means every registered check.
  std::vector<std::string> checks;

  void validate() const;
  Json to_json() const;
};
/// Inverse of to_json; absent keys keep their defaults, unknown keys are rejected.
SuiteConfig suite_config_from_json(const Json& j);

struct Instance {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  AlgebraPtr algebra;
  ModulePtr module;
  ContextKind context = ContextKind::Matlis;  // Matlis or Regular
  std::string origin;

  /// Self-contained: algebra and module are serialized in full.
  Json descriptor() const;
};
Instance instance_from_descriptor(const Json& j);

/// Deterministic in cfg. Instances 0, 1, 2 live over F1, F2, F3.
std::vector<Instance> random_instances(const SuiteConfig& cfg);

/// Quotient of a path algebra on at most 2 vertices and 3 arrows by all paths
/// of a fixed length L in {2, 3, 4} and up to two random quadratic relations.
/// Rejection sampled until dim <= max_dim and the growth filter passes.
AlgebraPtr random_algebra(std::mt19937_64& rng, std::size_t max_dim, const FieldDesc& f);
struct GeneratedModule {
  ModulePtr module;
  std::string origin;
};
/// Random layered generator actions, rejected until the relations hold.
GeneratedModule random_module(const AlgebraPtr& a, std::mt19937_64& rng, std::size_t max_dim);
/// Simples, projectives, injectives and their (co)syzygies of degree 1 and 2.
GeneratedModule structural_module(const AlgebraPtr& a, std::mt19937_64& rng, std::size_t max_dim);

// ---------------------------------------------------------------------------

enum class Verdict { Pass, Fail, Skipped };
const char* verdict_name(Verdict v);

struct CheckResult {
  std::string check;
  std::optional<std::size_t> instance;  // none for the fixture examples
  Verdict verdict = Verdict::Pass;
  std::string reason;
  Json data = Json::object();
  /// On Fail: {"check", "bound", "corrupt", "instance": descriptor}.
  Json witness;
  Json to_json() const;
};

const std::vector<std::string>& registered_checks();
const std::vector<std::string>& example_checks();

/// thm_3_9, thm_4_3, prop_5_1 and cor_5_2 need injective resolutions of depth 3
/// or Matlis-context cotransposes; they are Skipped over larger algebras.
inline constexpr std::size_t kHeavyCheckAlgebraDim = 6;

/// Throws UnknownCheck for names outside registered_checks().
CheckResult check_theorem(const std::string& name, const Instance& inst, std::size_t bound, bool corrupt = false);
/// example_f9, example_f10, example_two_loop.
CheckResult run_example(const std::string& name, std::size_t bound, std::uint64_t seed = 1);
/// Reruns the check recorded in a Fail witness.
CheckResult replay_witness(const Json& witness);

struct SuiteReport {
  Json json;
  std::size_t pass = 0, fail = 0, skipped = 0;
  bool ok() const { return fail == 0; }
};
SuiteReport run_suite(const SuiteConfig& cfg);
std::string suite_report_text(const SuiteReport& r);

}  // namespace cotorkit
