#include "cotorkit/cotorkit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "cotorkit/io.hpp"
#include "cotorkit/lab.hpp"

using namespace cotorkit;

struct cotorkit_algebra {
  AlgebraPtr a;
};

struct cotorkit_module {
  ModulePtr m;
  std::string id;
  // A right module's acting algebra is A^op, which only weakly refers back to A.
  AlgebraPtr owner;
};

struct cotorkit_context {
  ContextPtr ctx;
  std::string label;
};

namespace {

thread_local std::string last_error;

cotorkit_status set_error(cotorkit_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
cotorkit_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return COTORKIT_OK;
  } catch (const Error& e) {
    return set_error(static_cast<cotorkit_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(COTORKIT_OUT_OF_MEMORY, "out of memory");
  } catch (const nlohmann::json::exception& e) {
    return set_error(COTORKIT_PARSE_ERROR, e.what());
  } catch (const std::exception& e) {
    return set_error(COTORKIT_INTERNAL_ERROR, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string render(const Json& j, cotorkit_format fmt, const std::string& text) {
  return fmt == COTORKIT_JSON ? dump_canonical(j) : text;
}

ModulePtr viewed_over(const ModulePtr& m, const AlgebraPtr& a, Side side) {
  if (m->acting().get() == a.get() && m->side() == side) return m;
  require(m->acting()->same_table(*a), ErrorCode::AlgebraMismatch, "module and algebra do not match");
  return std::make_shared<Module>(m->reinterpret(a, side));
}

// The context's R must be the acting algebra itself, not just an equal table.
ModulePtr for_context(const ModulePtr& m, const SemidualizingContext& ctx) {
  require(m->side() == Side::Left, ErrorCode::SideMismatch, "the context applies to left modules");
  return viewed_over(m, ctx.r, Side::Left);
}

Json module_file(const Module& m) {
  Json j = module_to_json(m);
  j["algebra"] = algebra_to_json(*m.algebra());
  return j;
}

std::size_t top_dim(const Module& m) { return m.dim() - m.radical_image().cols(); }

Json module_summary(const ModulePtr& m, const std::string& id) {
  std::size_t pc = projective_cover(m).p->dim();
  std::size_t ie = injective_envelope(m).i->dim();
  return Json{{"module", id},
              {"valid", true},
              {"side", side_name(m->side())},
              {"dim", m->dim()},
              {"algebra_dim", m->acting()->dim()},
              {"field", field_to_json(m->field())},
              {"top_dim", top_dim(*m)},
              {"socle_dim", m->socle().cols()},
              {"projective_cover_dim", pc},
              {"injective_envelope_dim", ie},
              {"projective", pc == m->dim()},
              {"injective", ie == m->dim()}};
}

std::string module_summary_text(const Json& j) {
  std::ostringstream o;
  auto yn = [](bool v) { return v ? "yes" : "no"; };
  o << "module: " << j["module"].get<std::string>() << "\n";
  o << "valid " << j["side"].get<std::string>() << " module of dim " << j["dim"].get<std::size_t>()
    << " over an algebra of dim " << j["algebra_dim"].get<std::size_t>() << "\n";
  o << "top dim " << j["top_dim"].get<std::size_t>() << ", socle dim " << j["socle_dim"].get<std::size_t>() << "\n";
  o << "projective cover dim " << j["projective_cover_dim"].get<std::size_t>() << ", injective envelope dim "
    << j["injective_envelope_dim"].get<std::size_t>() << "\n";
  o << "projective: " << yn(j["projective"].get<bool>()) << ", injective: " << yn(j["injective"].get<bool>()) << "\n";
  return o.str();
}

Json algebra_summary(const Algebra& a) {
  const char* pres = std::holds_alternative<QuiverPresentation>(a.presentation())          ? "quiver"
                     : std::holds_alternative<CommutativePresentation>(a.presentation()) ? "commutative"
                                                                                          : "table";
  return Json{{"valid", true},
              {"field", field_to_json(a.field())},
              {"dim", a.dim()},
              {"presentation", pres},
              {"commutative", a.is_commutative()},
              {"primitive_idempotents", a.idempotents().size()},
              {"indecomposable_projectives", a.idempotent_representatives().size()},
              {"radical_dim", a.radical().cols()},
              {"loewy_length", radical_nilpotency_index(a)}};
}

std::string resolution_text(const Json& r, const std::string& id) {
  std::ostringstream o;
  o << r["side"].get<std::string>() << " resolution of " << id << ", length " << r["length"].get<std::size_t>() << "\n";
  o << (r["side"] == "projective" ? "Betti numbers:" : "Bass numbers:");
  for (const auto& v : r["multiplicities"]) o << " " << v.get<std::size_t>();
  o << "\nterm dims:";
  for (const auto& v : r["term_dims"]) o << " " << v.get<std::size_t>();
  o << "\n";
  if (!r["zero_from"].is_null()) o << "zero from index " << r["zero_from"].get<std::size_t>() << "\n";
  return o.str();
}

Json approximation_json(const Approximation& a, const ApproxCheck& chk, const std::string& id,
                        const std::string& label) {
  return Json{{"module", id},
              {"context", {{"C", label}}},
              {"n", a.n},
              {"mode", a.mode == ApproxMode::Standard ? "standard" : "bounded_infinity"},
              {"x", module_file(*a.x)},
              {"y", module_file(*a.y)},
              {"dims", {{"M", a.m_to_x.source->dim()}, {"X", a.x->dim()}, {"Y", a.y->dim()}}},
              {"y_coresolution_length", a.y_certificate.length()},
              {"verified",
               {{"exact", chk.exact},
                {"x_condition", chk.x_condition},
                {"y_coresolution", chk.y_coresolution},
                {"ok", chk.ok()},
                {"detail", chk.detail}}},
              {"trace", a.trace}};
}

std::string approximation_text(const Json& j) {
  std::ostringstream o;
  auto yn = [](bool v) { return v ? "yes" : "no"; };
  const Json& v = j["verified"];
  o << "approximation of " << j["module"].get<std::string>() << " (C = " << j["context"]["C"].get<std::string>()
    << ", n = " << j["n"].get<std::size_t>() << ", " << j["mode"].get<std::string>() << ")\n";
  o << "0 -> M -> X -> Y -> 0 with dims " << j["dims"]["M"].get<std::size_t>() << ", "
    << j["dims"]["X"].get<std::size_t>() << ", " << j["dims"]["Y"].get<std::size_t>() << "\n";
  o << "add C coresolution of Y has length " << j["y_coresolution_length"].get<std::size_t>() << "\n";
  for (const auto& t : j["trace"]) o << "  " << t.get<std::string>() << "\n";
  o << "verifier: exact " << yn(v["exact"].get<bool>()) << ", X condition " << yn(v["x_condition"].get<bool>())
    << ", Y coresolution " << yn(v["y_coresolution"].get<bool>()) << "\n";
  if (!v["detail"].get<std::string>().empty()) o << "detail: " << v["detail"].get<std::string>() << "\n";
  return o.str();
}

}  // namespace

extern "C" {

const char* cotorkit_status_name(cotorkit_status s) {
  switch (s) {
    case COTORKIT_OK:
      return "Ok";
    case COTORKIT_INVALID_ARGUMENT:
      return "InvalidArgument";
    case COTORKIT_OUT_OF_MEMORY:
      return "OutOfMemory";
    default:
      if (s >= COTORKIT_PARSE_ERROR && s <= COTORKIT_RESOURCE_LIMIT) return error_code_name(static_cast<ErrorCode>(s));
      return "UnknownStatus";
  }
}

const char* cotorkit_last_error(void) { return last_error.c_str(); }

void cotorkit_free_string(char* s) { std::free(s); }

const char* cotorkit_version(void) { return "0.1.0"; }

cotorkit_status cotorkit_canonical_json(const char* json, char** out) {
  if (json == nullptr || out == nullptr) return set_error(COTORKIT_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = dup(dump_canonical(parse_json(json, "input"))); });
}

cotorkit_status cotorkit_algebra_load(const char* path, cotorkit_algebra** out) {
  if (path == nullptr || out == nullptr) return set_error(COTORKIT_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new cotorkit_algebra{load_algebra(path)}; });
}

void cotorkit_algebra_free(cotorkit_algebra* a) { delete a; }

cotorkit_status cotorkit_algebra_describe(const cotorkit_algebra* a, cotorkit_format fmt, char** out) {
  if (a == nullptr || out == nullptr) return set_error(COTORKIT_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    Json j = algebra_summary(*a->a);
    std::ostringstream o;
    o << "valid " << a->a->describe() << "\n";
    o << "presentation: " << j["presentation"].get<std::string>() << (a->a->is_commutative() ? ", commutative" : "")
      << "\n";
    o << "primitive idempotents " << j["primitive_idempotents"].get<std::size_t>() << ", radical dim "
      << j["radical_dim"].get<std::size_t>() << ", Loewy length " << j["loewy_length"].get<std::size_t>() << "\n";
    *out = dup(render(j, fmt, o.str()));
  });
}

cotorkit_status cotorkit_module_load(const char* path, cotorkit_module** out) {
  if (path == nullptr || out == nullptr) return set_error(COTORKIT_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    LoadedModule lm = load_module(path);
    *out = new cotorkit_module{lm.module, path, lm.algebra};
  });
}

void cotorkit_module_free(cotorkit_module* m) { delete m; }

size_t cotorkit_module_dim(const cotorkit_module* m) { return m == nullptr ? 0 : m->m->dim(); }

const char* cotorkit_module_id(const cotorkit_module* m) { return m == nullptr ? "" : m->id.c_str(); }

cotorkit_status cotorkit_module_describe(const cotorkit_module* m, cotorkit_format fmt, char** out) {
  if (m == nullptr || out == nullptr) return set_error(COTORKIT_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    Json j = module_summary(m->m, m->id);
    *out = dup(render(j, fmt, module_summary_text(j)));
  });
}

cotorkit_status cotorkit_module_to_json(const cotorkit_module* m, char** out) {
  if (m == nullptr || out == nullptr) return set_error(COTORKIT_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = dup(dump_canonical(module_file(*m->m))); });
}

cotorkit_status cotorkit_context_create(const cotorkit_module* m, const char* spec, size_t bound,
                                        cotorkit_context** out) {
  if (m == nullptr || spec == nullptr || out == nullptr) return set_error(COTORKIT_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    require(m->m->side() == Side::Left, ErrorCode::SideMismatch, "a context needs a left module");
    const AlgebraPtr& a = m->m->acting();
    std::string s = spec;
    ContextPtr ctx;
    if (s == "matlis") {
      ctx = matlis_context(a, bound);
    } else if (s == "regular") {
      require(a->is_commutative(), ErrorCode::Validation, "context \"regular\" needs a commutative algebra");
      ctx = regular_context(a, bound);
    } else {
      Bimodule c = load_bimodule(s);
      require(c.left_algebra()->same_table(*a), ErrorCode::AlgebraMismatch,
              s + ": left algebra differs from the algebra of " + m->id);
      ctx = make_context(c, bound);
    }
    *out = new cotorkit_context{ctx, s};
  });
}

void cotorkit_context_free(cotorkit_context* c) { delete c; }

cotorkit_status cotorkit_resolve(const cotorkit_module* m, int injective, size_t length, int with_maps,
                                 cotorkit_format fmt, char** out) {
  if (m == nullptr || out == nullptr) return set_error(COTORKIT_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    Resolution r = min_resolution(m->m, injective ? ResolutionSide::Injective : ResolutionSide::Projective, length);
    Json j = resolution_to_json(r, with_maps != 0);
    j["module"] = m->id;
    *out = dup(render(j, fmt, resolution_text(j, m->id)));
  });
}

cotorkit_status cotorkit_ext_dim(const cotorkit_module* m, const cotorkit_module* n, size_t i, size_t* out) {
  if (m == nullptr || n == nullptr || out == nullptr) return set_error(COTORKIT_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    ModulePtr nn = viewed_over(n->m, m->m->acting(), m->m->side());
    *out = ext_dims_balanced(m->m, nn, i, i)[0];
  });
}

cotorkit_status cotorkit_tor_dim(const cotorkit_module* x, const cotorkit_module* n, size_t i, size_t* out) {
  if (x == nullptr || n == nullptr || out == nullptr) return set_error(COTORKIT_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    require(n->m->side() == Side::Left, ErrorCode::SideMismatch, "Tor(X, N) needs a left module N");
    const AlgebraPtr& a = n->m->acting();
    ModulePtr xr = x->m;
    if (xr->side() == Side::Left) {
      require(a->is_commutative(), ErrorCode::SideMismatch,
              "Tor(X, N) needs a right module X unless the algebra is commutative");
      xr = viewed_over(xr, a, Side::Left);
      xr = std::make_shared<Module>(xr->reinterpret(a->opposite(), Side::Right));
    } else {
      xr = viewed_over(xr, a->opposite(), Side::Right);
    }
    *out = tor_dims_balanced(xr, n->m, i, i)[0];
  });
}

cotorkit_status cotorkit_transpose(const cotorkit_module* m, const cotorkit_context* c, cotorkit_module** out) {
  if (m == nullptr || c == nullptr || out == nullptr) return set_error(COTORKIT_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    ModulePtr t = transpose(for_context(m->m, *c->ctx), *c->ctx);
    *out = new cotorkit_module{t, "Tr(" + m->id + ")", t->algebra()};
  });
}

cotorkit_status cotorkit_cotranspose(const cotorkit_module* m, const cotorkit_context* c, cotorkit_module** out) {
  if (m == nullptr || c == nullptr || out == nullptr) return set_error(COTORKIT_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    ModulePtr t = cotranspose(for_context(m->m, *c->ctx), *c->ctx);
    *out = new cotorkit_module{t, "cTr(" + m->id + ")", t->algebra()};
  });
}

cotorkit_status cotorkit_invariants(const cotorkit_module* m, const cotorkit_context* c, size_t bound,
                                    cotorkit_format fmt, char** out) {
  if (m == nullptr || c == nullptr || out == nullptr) return set_error(COTORKIT_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    InvariantReport r = invariant_report(for_context(m->m, *c->ctx), *c->ctx, bound, m->id, c->label);
    *out = dup(render(invariant_report_to_json(r), fmt, invariant_report_text(r)));
  });
}

cotorkit_status cotorkit_approx(const cotorkit_module* m, const cotorkit_context* c, size_t n, int bounded_infinity,
                                cotorkit_format fmt, char** out, int* verified) {
  if (m == nullptr || c == nullptr || out == nullptr || verified == nullptr)
    return set_error(COTORKIT_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    ModulePtr mm = for_context(m->m, *c->ctx);
    Approximation a =
        build_approximation(mm, *c->ctx, n, bounded_infinity ? ApproxMode::BoundedInfinity : ApproxMode::Standard);
    ApproxCheck chk = verify_approximation(a, mm, *c->ctx);
    Json j = approximation_json(a, chk, m->id, c->label);
    *out = dup(render(j, fmt, approximation_text(j)));
    *verified = chk.ok() ? 1 : 0;
  });
}

cotorkit_status cotorkit_verify(const char* config_json, cotorkit_format fmt, char** out, size_t* failures) {
  if (config_json == nullptr || out == nullptr || failures == nullptr)
    return set_error(COTORKIT_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    SuiteConfig cfg = suite_config_from_json(parse_json(config_json, "suite config"));
    SuiteReport rep = run_suite(cfg);
    *out = dup(render(rep.json, fmt, suite_report_text(rep)));
    *failures = rep.fail;
  });
}

}  // extern "C"
