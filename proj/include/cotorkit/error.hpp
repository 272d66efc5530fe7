#pragma once

#include <stdexcept>
#include <string>

namespace cotorkit {

enum class ErrorCode {
  Parse = 1,
  Validation,
  DimensionMismatch,
  FieldMismatch,
  AlgebraMismatch,
  SideMismatch,
  NonAssociative,
  BadIdentity,
  BadIdempotents,
  NotPrimitive,
  InhomogeneousRelation,
  NotNilpotentByBound,
  UnsupportedField,
  RelationViolated,
  NotUnital,
  HomothetyNotIso,
  ExtNotVanishing,
  PreconditionFailed,
  UnknownCheck,
  InternalInconsistency,
  Internal,
  ResourceLimit,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace cotorkit
