#include "cotorkit/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace cotorkit {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& msg) {
  fail(ErrorCode::Parse, where + ": " + msg);
}

const Json& field_of(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) parse_fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string str_of(const Json& j, const std::string& where) {
  if (!j.is_string()) parse_fail(where, "expected a string");
  return j.get<std::string>();
}

std::size_t size_of(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0) return static_cast<std::size_t>(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) return std::stoull(s);
  }
  parse_fail(where, "expected a non-negative integer");
}

const Json& array_of(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an array");
  return j;
}

Rational scalar_of(const Json& j, const FieldDesc& f, const std::string& where) {
  if (!j.is_string()) parse_fail(where, "scalars must be strings");
  const std::string s = j.get<std::string>();
  try {
    return f.parse(s);
  } catch (const Error& e) {
    parse_fail(where, "bad scalar \"" + s + "\" (" + e.what() + ")");
  }
}

std::string idx(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Parse, path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json relation_term_json(const Rational& c, const Json& body, const char* key) {
  Json t = Json::object();
  t["coeff"] = c.str();
  t[key] = body;
  return t;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(ErrorCode::Parse, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
  }
}

Json read_json_file(const std::string& path) { return parse_json(slurp(path), path); }

namespace {

// Like dump(2), but arrays of scalars stay on one line so matrices read row by row.
void dump_to(const Json& j, int indent, std::string& out) {
  const std::string pad(indent, ' '), inner(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += inner + Json(it.key()).dump() + ": ";
      dump_to(it.value(), indent + 2, out);
    }
    out += "\n" + pad + "}";
  } else if (j.is_array()) {
    bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
    if (j.empty() || flat) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += (i ? ",\n" : "") + inner;
      dump_to(j[i], indent + 2, out);
    }
    out += "\n" + pad + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump_canonical(const Json& j) {
  std::string out;
  dump_to(j, 0, out);
  return out + "\n";
}

// ---------------------------------------------------------------------------

Json field_to_json(const FieldDesc& f) {
  if (f.is_rationals()) return Json{{"kind", "Q"}};
  return Json{{"kind", "Fp"}, {"p", f.p}};
}

FieldDesc field_from_json(const Json& j, const std::string& where) {
  std::string kind = str_of(field_of(j, "kind", where), where + ".kind");
  if (kind == "Q") return FieldDesc::rationals();
  if (kind == "Fp") {
    std::size_t p = size_of(field_of(j, "p", where), where + ".p");
    try {
      return FieldDesc::prime(static_cast<std::int64_t>(p));
    } catch (const Error& e) {
      parse_fail(where + ".p", e.what());
    }
  }
  parse_fail(where + ".kind", "unknown field kind \"" + kind + "\"");
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, const FieldDesc& f, long rows, long cols, const std::string& where) {
  const Json& a = array_of(j, where);
  if (rows >= 0 && a.size() != static_cast<std::size_t>(rows))
    parse_fail(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(a.size()));
  std::size_t c = cols >= 0 ? static_cast<std::size_t>(cols) : (a.empty() ? 0 : array_of(a[0], idx(where, 0)).size());
  Matrix m(f, a.size(), c);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Json& row = array_of(a[i], idx(where, i));
    if (row.size() != c)
      parse_fail(idx(where, i), "expected " + std::to_string(c) + " entries, got " + std::to_string(row.size()));
    for (std::size_t k = 0; k < c; ++k) m(i, k) = scalar_of(row[k], f, idx(idx(where, i), k));
  }
  return m;
}

// ---------------------------------------------------------------------------

Json algebra_to_json(const Algebra& a) {
  Json p;
  std::visit(
      [&](const auto& pres) {
        using T = std::decay_t<decltype(pres)>;
        if constexpr (std::is_same_v<T, QuiverPresentation>) {
          p["kind"] = "quiver";
          p["vertices"] = pres.vertices;
          Json arrows = Json::array();
          for (const auto& ar : pres.arrows) arrows.push_back({{"name", ar.name}, {"source", ar.source}, {"target", ar.target}});
          p["arrows"] = arrows;
          Json rels = Json::array();
          for (const auto& r : pres.relations) {
            Json terms = Json::array();
            for (const auto& t : r) terms.push_back(relation_term_json(t.coeff, t.path, "path"));
            rels.push_back(terms);
          }
          p["relations"] = rels;
          p["degree_bound"] = pres.degree_bound;
        } else if constexpr (std::is_same_v<T, CommutativePresentation>) {
          p["kind"] = "commutative";
          p["variables"] = pres.variables;
          Json rels = Json::array();
          for (const auto& r : pres.relations) {
            Json terms = Json::array();
            for (const auto& t : r) terms.push_back(relation_term_json(t.coeff, t.exponents, "mono"));
            rels.push_back(terms);
          }
          p["relations"] = rels;
          p["degree_bound"] = pres.degree_bound;
        } else {
          p["kind"] = "table";
          p["dim"] = pres.dim;
          if (!pres.labels.empty()) p["labels"] = pres.labels;
          Json mul = Json::array();
          for (const auto& plane : pres.mul) {
            Json pj = Json::array();
            for (const auto& row : plane) {
              Json rj = Json::array();
              for (const auto& c : row) rj.push_back(c.str());
              pj.push_back(rj);
            }
            mul.push_back(pj);
          }
          p["mul"] = mul;
          Json one = Json::array();
          for (const auto& c : pres.one) one.push_back(c.str());
          p["one"] = one;
          Json ids = Json::array();
          for (const auto& e : pres.idempotents) {
            Json ej = Json::array();
            for (const auto& c : e) ej.push_back(c.str());
            ids.push_back(ej);
          }
          p["idempotents"] = ids;
        }
      },
      a.presentation());
  return Json{{"field", field_to_json(a.field())}, {"presentation", p}};
}

AlgebraPtr algebra_from_json(const Json& j, const std::string& where) {
  FieldDesc f = field_from_json(field_of(j, "field", where), where + ".field");
  const std::string pw = where + ".presentation";
  const Json& p = field_of(j, "presentation", where);
  std::string kind = str_of(field_of(p, "kind", pw), pw + ".kind");
  auto degree_bound = [&](int def) {
    auto it = p.find("degree_bound");
    return it == p.end() ? def : static_cast<int>(size_of(*it, pw + ".degree_bound"));
  };
  Presentation pres;
  if (kind == "quiver") {
    QuiverPresentation q;
    const Json& vs = array_of(field_of(p, "vertices", pw), pw + ".vertices");
    for (std::size_t i = 0; i < vs.size(); ++i) q.vertices.push_back(str_of(vs[i], idx(pw + ".vertices", i)));
    const Json& as = array_of(field_of(p, "arrows", pw), pw + ".arrows");
    for (std::size_t i = 0; i < as.size(); ++i) {
      std::string aw = idx(pw + ".arrows", i);
      q.arrows.push_back({str_of(field_of(as[i], "name", aw), aw + ".name"),
                          str_of(field_of(as[i], "source", aw), aw + ".source"),
                          str_of(field_of(as[i], "target", aw), aw + ".target")});
    }
    if (p.contains("relations")) {
      const Json& rs = array_of(p["relations"], pw + ".relations");
      for (std::size_t i = 0; i < rs.size(); ++i) {
        std::string rw = idx(pw + ".relations", i);
        std::vector<PathTerm> rel;
        const Json& ts = array_of(rs[i], rw);
        for (std::size_t k = 0; k < ts.size(); ++k) {
          std::string tw = idx(rw, k);
          PathTerm t;
          t.coeff = scalar_of(field_of(ts[k], "coeff", tw), f, tw + ".coeff");
          const Json& path = array_of(field_of(ts[k], "path", tw), tw + ".path");
          for (std::size_t m = 0; m < path.size(); ++m) t.path.push_back(str_of(path[m], idx(tw + ".path", m)));
          rel.push_back(t);
        }
        q.relations.push_back(rel);
      }
    }
    q.degree_bound = degree_bound(q.degree_bound);
    pres = q;
  } else if (kind == "commutative") {
    CommutativePresentation c;
    const Json& vs = array_of(field_of(p, "variables", pw), pw + ".variables");
    for (std::size_t i = 0; i < vs.size(); ++i) c.variables.push_back(str_of(vs[i], idx(pw + ".variables", i)));
    if (p.contains("relations")) {
      const Json& rs = array_of(p["relations"], pw + ".relations");
      for (std::size_t i = 0; i < rs.size(); ++i) {
        std::string rw = idx(pw + ".relations", i);
        std::vector<MonomialTerm> rel;
        const Json& ts = array_of(rs[i], rw);
        for (std::size_t k = 0; k < ts.size(); ++k) {
          std::string tw = idx(rw, k);
          MonomialTerm t;
          t.coeff = scalar_of(field_of(ts[k], "coeff", tw), f, tw + ".coeff");
          const Json& mono = array_of(field_of(ts[k], "mono", tw), tw + ".mono");
          if (mono.size() != c.variables.size())
            parse_fail(tw + ".mono", "exponent vector needs " + std::to_string(c.variables.size()) + " entries");
          for (std::size_t m = 0; m < mono.size(); ++m)
            t.exponents.push_back(static_cast<int>(size_of(mono[m], idx(tw + ".mono", m))));
          rel.push_back(t);
        }
        c.relations.push_back(rel);
      }
    }
    c.degree_bound = degree_bound(c.degree_bound);
    pres = c;
  } else if (kind == "table") {
    TablePresentation t;
    t.dim = size_of(field_of(p, "dim", pw), pw + ".dim");
    if (p.contains("labels")) {
      const Json& ls = array_of(p["labels"], pw + ".labels");
      for (std::size_t i = 0; i < ls.size(); ++i) t.labels.push_back(str_of(ls[i], idx(pw + ".labels", i)));
    }
    const Json& mul = array_of(field_of(p, "mul", pw), pw + ".mul");
    if (mul.size() != t.dim) parse_fail(pw + ".mul", "expected " + std::to_string(t.dim) + " planes");
    for (std::size_t i = 0; i < t.dim; ++i) {
      Matrix plane = matrix_from_json(mul[i], f, static_cast<long>(t.dim), static_cast<long>(t.dim), idx(pw + ".mul", i));
      std::vector<std::vector<Rational>> rows(t.dim, std::vector<Rational>(t.dim));
      for (std::size_t r = 0; r < t.dim; ++r)
        for (std::size_t c = 0; c < t.dim; ++c) rows[r][c] = plane(r, c);
      t.mul.push_back(rows);
    }
    auto vec = [&](const Json& v, const std::string& w) {
      const Json& a = array_of(v, w);
      if (a.size() != t.dim) parse_fail(w, "expected " + std::to_string(t.dim) + " entries");
      std::vector<Rational> out;
      for (std::size_t i = 0; i < a.size(); ++i) out.push_back(scalar_of(a[i], f, idx(w, i)));
      return out;
    };
    t.one = vec(field_of(p, "one", pw), pw + ".one");
    if (p.contains("idempotents")) {
      const Json& es = array_of(p["idempotents"], pw + ".idempotents");
      for (std::size_t i = 0; i < es.size(); ++i) t.idempotents.push_back(vec(es[i], idx(pw + ".idempotents", i)));
    }
    pres = t;
  } else {
    parse_fail(pw + ".kind", "unknown presentation kind \"" + kind + "\"");
  }
  try {
    return build_algebra(pres, f);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    throw Error(e.code(), where + ": " + e.what());
  }
}

AlgebraPtr load_algebra(const std::string& path) {
  static std::mutex mu;
  static std::map<std::string, AlgebraPtr> cache;
  std::error_code ec;
  std::string key = fs::weakly_canonical(path, ec).string();
  if (ec) key = path;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  AlgebraPtr a = algebra_from_json(read_json_file(path), path);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, a).first->second;
}

// ---------------------------------------------------------------------------

Json module_to_json(const Module& m) {
  Json action = Json::object();
  for (const auto& g : m.acting()->generators()) {
    if (g.element == m.acting()->one()) continue;
    action[g.name] = matrix_to_json(m.act(g.element));
  }
  return Json{{"side", side_name(m.side())}, {"dim", m.dim()}, {"action", action}};
}

ModulePtr module_from_json(const Json& j, const AlgebraPtr& a, const std::string& where) {
  std::string side = str_of(field_of(j, "side", where), where + ".side");
  if (side != "left" && side != "right") parse_fail(where + ".side", "expected \"left\" or \"right\"");
  std::size_t dim = size_of(field_of(j, "dim", where), where + ".dim");
  const Json& act = field_of(j, "action", where);
  if (!act.is_object()) parse_fail(where + ".action", "expected an object");
  std::map<std::string, Matrix> gens;
  for (auto it = act.begin(); it != act.end(); ++it)
    gens.emplace(it.key(), matrix_from_json(it.value(), a->field(), static_cast<long>(dim), static_cast<long>(dim),
                                            where + ".action." + it.key()));
  try {
    return make_module(a, side == "left" ? Side::Left : Side::Right, dim, gens);
  } catch (const Error& e) {
    throw Error(e.code(), where + ": " + e.what());
  }
}

namespace {

AlgebraPtr algebra_ref(const Json& j, const std::string& base_dir, const std::string& where) {
  if (j.is_object()) return algebra_from_json(j, where);
  std::string p = str_of(j, where);
  fs::path full = fs::path(p).is_absolute() ? fs::path(p) : fs::path(base_dir) / p;
  return load_algebra(full.string());
}

std::string dir_of(const std::string& path) {
  fs::path d = fs::path(path).parent_path();
  return d.empty() ? "." : d.string();
}

}  // namespace

LoadedModule load_module(const std::string& path) {
  Json j = read_json_file(path);
  LoadedModule out;
  out.algebra = algebra_ref(field_of(j, "algebra", path), dir_of(path), path + ": algebra");
  out.module = module_from_json(j, out.algebra, path);
  return out;
}

Json bimodule_to_json(const Bimodule& c) {
  auto acts = [](const Module& m) {
    return module_to_json(m)["action"];
  };
  return Json{{"left_algebra", algebra_to_json(*c.left_algebra())},
              {"right_algebra", algebra_to_json(*c.right_algebra())},
              {"dim", c.dim()},
              {"left_action", acts(*c.left_module())},
              {"right_action", acts(*c.right_module())}};
}

Bimodule bimodule_from_json(const Json& j, const std::string& base_dir, const std::string& where) {
  AlgebraPtr r = algebra_ref(field_of(j, "left_algebra", where), base_dir, where + ".left_algebra");
  AlgebraPtr s = algebra_ref(field_of(j, "right_algebra", where), base_dir, where + ".right_algebra");
  std::size_t dim = size_of(field_of(j, "dim", where), where + ".dim");
  Json lj{{"side", "left"}, {"dim", dim}, {"action", field_of(j, "left_action", where)}};
  Json rj{{"side", "right"}, {"dim", dim}, {"action", field_of(j, "right_action", where)}};
  ModulePtr l = module_from_json(lj, r, where + "(left)");
  ModulePtr rm = module_from_json(rj, s, where + "(right)");
  Bimodule c(r, s, dim, l->actions(), rm->actions());
  try {
    c.validate();
  } catch (const Error& e) {
    throw Error(e.code(), where + ": " + e.what());
  }
  return c;
}

Bimodule load_bimodule(const std::string& path) { return bimodule_from_json(read_json_file(path), dir_of(path), path); }

Json resolution_to_json(const Resolution& r, bool with_maps) {
  Json j;
  j["side"] = r.side == ResolutionSide::Projective ? "projective" : "injective";
  j["length"] = r.length();
  j["multiplicities"] = r.multiplicities();
  std::vector<std::size_t> dims;
  Json verts = Json::array();
  for (std::size_t i = 0; i <= r.length(); ++i) {
    dims.push_back(r.term_dim(i));
    verts.push_back(r.proj[i].vertices());
  }
  j["term_dims"] = dims;
  j["vertices"] = verts;
  j["minimal"] = r.minimal;
  j["zero_from"] = r.zero_from ? Json(*r.zero_from) : Json(nullptr);
  if (with_maps) {
    Json maps = Json::array();
    for (const auto& d : r.d) maps.push_back(matrix_to_json(d));
    j["maps"] = maps;
    j["augmentation"] = matrix_to_json(r.augmentation);
  }
  return j;
}

Json invariant_report_to_json(const InvariantReport& r) {
  const VanishingProfile& p = r.profile;
  Json prof{{"bound", p.bound},
            {"torsionfree_through", p.torsionfree_up_to},
            {"cotorsionfree_through", p.cotorsionfree_up_to},
            {"cospherical_through", p.cospherical_up_to},
            {"cograde", p.cograde ? Json(p.cograde->str()) : Json(nullptr)}};
  Json bass{{"bound", r.bass.bound},
            {"ext_vanishes", r.bass.ext_vanishes},
            {"tor_vanishes", r.bass.tor_vanishes},
            {"theta_iso", r.bass.theta_iso},
            {"in_class", r.bass.in_class()}};
  return Json{{"module", r.module_id},
              {"context", {{"C", r.context_label}, {"bound", r.bound}}},
              {"profile", prof},
              {"bass", bass},
              {"gorenstein_injective_upto", r.gorenstein.through_bound ? Json(r.gorenstein.bound) : Json(false)},
              {"injective", r.injective},
              {"theta", {{"epi", p.theta_epi}, {"iso", p.theta_iso}}},
              {"sigma", {{"mono", p.sigma_mono}, {"iso", p.sigma_iso}}}};
}

std::string invariant_report_text(const InvariantReport& r) {
  const VanishingProfile& p = r.profile;
  const std::string b = " (bound " + std::to_string(r.bound) + ")";
  auto yn = [](bool v) { return v ? "yes" : "no"; };
  std::ostringstream o;
  o << "module: " << r.module_id << "\n";
  o << "context: C = " << r.context_label << ", bound " << r.bound << "\n";
  o << "torsionfree through n = " << p.torsionfree_up_to << b << "\n";
  o << "cotorsionfree through n = " << p.cotorsionfree_up_to << b << "\n";
  o << "cospherical through n = " << p.cospherical_up_to << b << "\n";
  if (p.cograde) o << "cograde: " << p.cograde->str() << "\n";
  o << "theta: epi " << yn(p.theta_epi) << ", iso " << yn(p.theta_iso) << "\n";
  o << "sigma: mono " << yn(p.sigma_mono) << ", iso " << yn(p.sigma_iso) << "\n";
  o << "Bass class up to bound " << r.bass.bound << ": " << yn(r.bass.in_class()) << "\n";
  o << "injective: " << yn(r.injective) << "\n";
  o << r.gorenstein.str() << "\n";
  return o.str();
}

}  // namespace cotorkit
