#pragma once

#include <stdexcept>
#include <string>

namespace equivol {

enum class ErrorKind {
  // polyhedron validation
  InvalidFace,
  UnusedVertex,
  EdgeNotShared,
  NotSimple,
  EulerViolation,
  NotThreeConnected,
  TooSmall,
  // angle / volume preconditions
  AngleOutOfRange,
  NotAnOrthoscheme,
  ConstraintOutOfRange,
  // combinatorics
  NotFourValent,
  NotBipartite,
  ParityError,
  // bounds
  NegativeArea,
  NotRealizable,
  HasFiniteVertices,
  HasIdealVertices,
  WrongDispatch,
  UnknownKind,
  // circuits / families
  UnsupportedK,
  ParameterTooSmall,
  // planar_code streams
  BadHeader,
  TruncatedRecord,
  InconsistentRotation,
  Unsupported,
  NotSpherical,
  // generic malformed input (CLI, JSON)
  BadInput,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace equivol
