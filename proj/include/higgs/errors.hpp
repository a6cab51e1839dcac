#pragma once

#include <stdexcept>
#include <string>

namespace ph {

enum class Err {
  FactorizationUnavailable,
  DuplicateNode,
  SingularSystem,
  PoleAtLimit,
  OddPart,
  NonGeneric,
  NoPivot,
  PoleCollision,
  MissingBlowup,
  Indeterminate,
  NonSemisimple,
  ParamOutsideX,
  BundleBoundExceeded,
  DegenerateEigenSolve,
  DegenerateQuadratic,
  ZeroDivision,
  UsageError,
  ParseError,
  PreconditionViolation,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }
  const char* name() const { return err_name(code_); }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace ph
