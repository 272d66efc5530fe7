#pragma once

// JSON files for algebras, modules and bimodules, and canonical report output.

#include <string>

#include "cotorkit/cotor.hpp"
#include "json.hpp"

namespace cotorkit {

using Json = nlohmann::json;

/// Parses JSON text; syntax errors name the source and line:column.
Json parse_json(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);
/// Sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const Json& j);

Json field_to_json(const FieldDesc& f);
FieldDesc field_from_json(const Json& j, const std::string& where);

Json matrix_to_json(const Matrix& m);
/// A rows x cols array of scalar strings; rows/cols of -1 accept any shape.
Matrix matrix_from_json(const Json& j, const FieldDesc& f, long rows, long cols, const std::string& where);

Json algebra_to_json(const Algebra& a);
AlgebraPtr algebra_from_json(const Json& j, const std::string& where = "algebra");
AlgebraPtr load_algebra(const std::string& path);

/// {"side", "dim", "action": {generator: matrix}}; the algebra reference is added by the caller.
Json module_to_json(const Module& m);
/// `a` is the algebra the module is a (left or right) module over.
ModulePtr module_from_json(const Json& j, const AlgebraPtr& a, const std::string& where = "module");

struct LoadedModule {
  AlgebraPtr algebra;
  ModulePtr module;
};
/// "algebra" is either a path (relative to the module file) or an inline algebra object.
LoadedModule load_module(const std::string& path);

/// {"left_algebra", "right_algebra", "dim", "left_action", "right_action"}.
Json bimodule_to_json(const Bimodule& c);
Bimodule bimodule_from_json(const Json& j, const std::string& base_dir, const std::string& where = "bimodule");
Bimodule load_bimodule(const std::string& path);

Json resolution_to_json(const Resolution& r, bool with_maps);

Json invariant_report_to_json(const InvariantReport& r);
std::string invariant_report_text(const InvariantReport& r);

}  // namespace cotorkit
