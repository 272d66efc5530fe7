// cotorkit command line front end; talks to the library through the C API only.

#include <sys/resource.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cotorkit/cotorkit.h"
#include "json.hpp"

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct AlgebraFree {
  void operator()(cotorkit_algebra* a) const { cotorkit_algebra_free(a); }
};
struct ModuleFree {
  void operator()(cotorkit_module* m) const { cotorkit_module_free(m); }
};
struct ContextFree {
  void operator()(cotorkit_context* c) const { cotorkit_context_free(c); }
};
struct StringFree {
  void operator()(char* s) const { cotorkit_free_string(s); }
};
using AlgebraHandle = std::unique_ptr<cotorkit_algebra, AlgebraFree>;
using ModuleHandle = std::unique_ptr<cotorkit_module, ModuleFree>;
using ContextHandle = std::unique_ptr<cotorkit_context, ContextFree>;
using Text = std::unique_ptr<char, StringFree>;

// Raised on a non-OK status; carries the exit code the status maps to.
struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(cotorkit_status s) {
  switch (s) {
    case COTORKIT_PRECONDITION_FAILED:
    case COTORKIT_INTERNAL_INCONSISTENCY:
    case COTORKIT_INTERNAL_ERROR:
      return kExitFail;
    default:
      return kExitInput;
  }
}

void check(cotorkit_status s) {
  if (s == COTORKIT_OK) return;
  std::string msg = std::string(cotorkit_status_name(s)) + ": " + cotorkit_last_error();
  if (s == COTORKIT_OUT_OF_MEMORY) msg += "; try a smaller bound or length";
  throw Failure{exit_code_for(s), msg};
}

// Caps the address space so that exhaustion surfaces as OutOfMemory rather than a kill.
void limit_memory() {
  long pages = sysconf(_SC_PHYS_PAGES), page = sysconf(_SC_PAGE_SIZE);
  if (pages <= 0 || page <= 0) return;
  rlim_t cap = static_cast<rlim_t>(pages) * static_cast<rlim_t>(page) / 10 * 8;
  if (const char* mb = std::getenv("COTORKIT_MEMORY_MB")) cap = static_cast<rlim_t>(std::strtoull(mb, nullptr, 10)) << 20;
  rlimit cur{};
  if (getrlimit(RLIMIT_AS, &cur) != 0 || cap == 0) return;
  if (cur.rlim_cur != RLIM_INFINITY && cur.rlim_cur <= cap) return;
  if (cur.rlim_max != RLIM_INFINITY && cur.rlim_max < cap) cap = cur.rlim_max;
  rlimit lim{cap, cur.rlim_max};
  setrlimit(RLIMIT_AS, &lim);
}

std::string take(char* raw) {
  Text t(raw);
  return t.get();
}

struct Globals {
  bool json = false;
  std::size_t bound = 6;
  std::string context = "matlis";
  std::uint64_t seed = 1;
  std::size_t count = 100;
};

cotorkit_format fmt(const Globals& g) { return g.json ? COTORKIT_JSON : COTORKIT_TEXT; }

std::string canonical(const Json& j) {
  char* out = nullptr;
  check(cotorkit_canonical_json(j.dump().c_str(), &out));
  return take(out);
}

ModuleHandle load_module(const std::string& path) {
  cotorkit_module* m = nullptr;
  check(cotorkit_module_load(path.c_str(), &m));
  return ModuleHandle(m);
}

ContextHandle make_context(const cotorkit_module* m, const Globals& g) {
  cotorkit_context* c = nullptr;
  check(cotorkit_context_create(m, g.context.c_str(), g.bound, &c));
  return ContextHandle(c);
}

struct Outcome {
  std::string out;
  int code = kExitOk;
};

// Validation failures are the answer to "check", not input errors; syntax errors stay input errors.
Outcome check_report(cotorkit_status s, const std::string& path, const Globals& g) {
  if (s == COTORKIT_PARSE_ERROR || s == COTORKIT_INVALID_ARGUMENT) check(s);
  Json j{{"path", path}, {"valid", false}, {"error", cotorkit_status_name(s)}, {"message", cotorkit_last_error()}};
  std::string text = path + ": invalid (" + cotorkit_status_name(s) + ")\n" + cotorkit_last_error() + "\n";
  return {g.json ? canonical(j) : text, kExitFail};
}

Outcome algebra_check(const std::string& path, const Globals& g) {
  cotorkit_algebra* a = nullptr;
  cotorkit_status s = cotorkit_algebra_load(path.c_str(), &a);
  if (s != COTORKIT_OK) return check_report(s, path, g);
  AlgebraHandle h(a);
  char* out = nullptr;
  check(cotorkit_algebra_describe(h.get(), fmt(g), &out));
  std::string body = take(out);
  if (g.json) {
    Json j = Json::parse(body);
    j["path"] = path;
    return {canonical(j)};
  }
  return {path + "\n" + body};
}

Outcome module_check(const std::string& path, const Globals& g) {
  cotorkit_module* m = nullptr;
  cotorkit_status s = cotorkit_module_load(path.c_str(), &m);
  if (s != COTORKIT_OK) return check_report(s, path, g);
  ModuleHandle h(m);
  char* out = nullptr;
  check(cotorkit_module_describe(h.get(), fmt(g), &out));
  return {take(out)};
}

Outcome resolve(const std::string& path, const std::string& side, std::size_t length, bool maps, const Globals& g) {
  ModuleHandle m = load_module(path);
  char* out = nullptr;
  check(cotorkit_resolve(m.get(), side == "injective", length, maps, fmt(g), &out));
  return {take(out)};
}

Outcome ext_tor(bool ext, const std::string& a, const std::string& b, std::size_t i, const Globals& g) {
  ModuleHandle x = load_module(a), n = load_module(b);
  std::size_t d = 0;
  check(ext ? cotorkit_ext_dim(x.get(), n.get(), i, &d) : cotorkit_tor_dim(x.get(), n.get(), i, &d));
  const char* name = ext ? "Ext" : "Tor";
  if (g.json) return {canonical(Json{{"kind", ext ? "ext" : "tor"}, {"i", i}, {"left", a}, {"right", b}, {"dim", d}})};
  std::ostringstream o;
  o << "dim " << name << (ext ? "^" : "_") << i << "(" << a << ", " << b << ") = " << d << "\n";
  return {o.str()};
}

Outcome transpose_like(bool co, const std::string& path, const Globals& g) {
  ModuleHandle m = load_module(path);
  ContextHandle c = make_context(m.get(), g);
  cotorkit_module* t = nullptr;
  check(co ? cotorkit_cotranspose(m.get(), c.get(), &t) : cotorkit_transpose(m.get(), c.get(), &t));
  ModuleHandle th(t);
  char* out = nullptr;
  if (g.json) {
    check(cotorkit_module_to_json(th.get(), &out));
    return {take(out)};
  }
  check(cotorkit_module_describe(th.get(), COTORKIT_TEXT, &out));
  return {"context: C = " + g.context + "\n" + take(out)};
}

Outcome invariants(const std::string& path, const Globals& g) {
  ModuleHandle m = load_module(path);
  ContextHandle c = make_context(m.get(), g);
  char* out = nullptr;
  check(cotorkit_invariants(m.get(), c.get(), g.bound, fmt(g), &out));
  return {take(out)};
}

Outcome approx(const std::string& path, std::size_t n, const std::string& mode, const Globals& g) {
  ModuleHandle m = load_module(path);
  ContextHandle c = make_context(m.get(), g);
  char* out = nullptr;
  int verified = 0;
  check(cotorkit_approx(m.get(), c.get(), n, mode == "infinity", fmt(g), &out, &verified));
  return {take(out), verified ? kExitOk : kExitFail};
}

Outcome verify(const std::vector<std::string>& checks, bool corrupt, const Globals& g) {
  Json cfg{{"seed", g.seed}, {"count", g.count}, {"bound", g.bound}, {"corrupt", corrupt}};
  if (!checks.empty()) cfg["checks"] = checks;
  char* out = nullptr;
  std::size_t failures = 0;
  check(cotorkit_verify(cfg.dump().c_str(), fmt(g), &out, &failures));
  return {take(out), failures == 0 ? kExitOk : kExitFail};
}

}  // namespace

int main(int argc, char** argv) {
  limit_memory();
  CLI::App app{"cotorkit: exact homological invariants over finite-dimensional algebras", "cotorkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cotorkit_version()));
  Globals g;
  app.add_flag("--json", g.json, "canonical JSON output");
  app.add_option("--bound", g.bound, "Ext/Tor vanishing bound")->envname("COTORKIT_BOUND")->check(CLI::Range(1, 64));
  app.add_option("--context", g.context, "matlis, regular or a bimodule file");
  app.add_option("--seed", g.seed, "suite seed");
  app.add_option("--count", g.count, "number of random instances");

  std::optional<Outcome> result;
  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  std::string path, path2, side = "projective", mode = "standard";
  std::size_t length = 4, degree = 0, n = 1;
  bool maps = false, corrupt = false;
  std::vector<std::string> checks;

  CLI::App* algebra = sub("algebra", "algebra files");
  algebra->require_subcommand(1);
  CLI::App* acheck = algebra->add_subcommand("check", "parse and validate an algebra file");
  acheck->fallthrough();
  acheck->add_option("path", path)->required();
  acheck->callback([&] { result = algebra_check(path, g); });

  CLI::App* module = sub("module", "module files");
  module->require_subcommand(1);
  CLI::App* mcheck = module->add_subcommand("check", "parse and validate a module file");
  mcheck->fallthrough();
  mcheck->add_option("path", path)->required();
  mcheck->callback([&] { result = module_check(path, g); });

  CLI::App* res = sub("resolve", "minimal projective or injective resolution");
  res->add_option("module", path)->required();
  res->add_option("--side", side)->check(CLI::IsMember({"projective", "injective"}));
  res->add_option("--length", length);
  res->add_flag("--maps", maps, "include the differentials");
  res->callback([&] { result = resolve(path, side, length, maps, g); });

  for (bool ext : {true, false}) {
    CLI::App* s = sub(ext ? "ext" : "tor", ext ? "dim Ext^i(M, N)" : "dim Tor_i(X, N)");
    s->add_option(ext ? "M" : "X", path)->required();
    s->add_option("N", path2)->required();
    s->add_option("--i", degree)->required();
    s->callback([&, ext] { result = ext_tor(ext, path, path2, degree, g); });
  }

  for (bool co : {false, true}) {
    CLI::App* s = sub(co ? "cotranspose" : "transpose", co ? "cTr_C M" : "Tr_C M");
    s->add_option("module", path)->required();
    s->callback([&, co] { result = transpose_like(co, path, g); });
  }

  CLI::App* inv = sub("invariants", "vanishing profile, Bass class and Gorenstein injectivity");
  inv->add_option("module", path)->required();
  inv->callback([&] { result = invariants(path, g); });

  CLI::App* ap = sub("approx", "0 -> M -> X -> Y -> 0 with X cospherical and Y of finite add C dimension");
  ap->add_option("module", path)->required();
  ap->add_option("--n", n)->check(CLI::PositiveNumber);
  ap->add_option("--mode", mode)->check(CLI::IsMember({"standard", "infinity"}));
  ap->callback([&] { result = approx(path, n, mode, g); });

  CLI::App* ver = sub("verify", "randomized theorem checks and the fixture examples");
  ver->add_flag("--corrupt", corrupt, "build Tr from a presentation missing one relation");
  ver->add_option("--checks", checks, "restrict to these checks")->delimiter(',');
  ver->callback([&] { result = verify(checks, corrupt, g); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  } catch (const Failure& f) {
    std::cerr << "cotorkit: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "cotorkit: " << e.what() << "\n";
    return kExitInput;
  }
  if (!result) return kExitInput;
  std::fwrite(result->out.data(), 1, result->out.size(), stdout);
  std::fflush(stdout);
  return result->code;
}
