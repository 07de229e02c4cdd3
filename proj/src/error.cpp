#include "equivol/error.hpp"

namespace equivol {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidFace: return "InvalidFace";
    case ErrorKind::UnusedVertex: return "UnusedVertex";
    case ErrorKind::EdgeNotShared: return "EdgeNotShared";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::EulerViolation: return "EulerViolation";
    case ErrorKind::NotThreeConnected: return "NotThreeConnected";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::AngleOutOfRange: return "AngleOutOfRange";
    case ErrorKind::NotAnOrthoscheme: return "NotAnOrthoscheme";
    case ErrorKind::ConstraintOutOfRange: return "ConstraintOutOfRange";
    case ErrorKind::NotFourValent: return "NotFourValent";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::ParityError: return "ParityError";
    case ErrorKind::NegativeArea: return "NegativeArea";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::HasFiniteVertices: return "HasFiniteVertices";
    case ErrorKind::HasIdealVertices: return "HasIdealVertices";
    case ErrorKind::WrongDispatch: return "WrongDispatch";
    case ErrorKind::UnknownKind: return "UnknownKind";
    case ErrorKind::UnsupportedK: return "UnsupportedK";
    case ErrorKind::ParameterTooSmall: return "ParameterTooSmall";
    case ErrorKind::BadHeader: return "BadHeader";
    case ErrorKind::TruncatedRecord: return "TruncatedRecord";
    case ErrorKind::InconsistentRotation: return "InconsistentRotation";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::NotSpherical: return "NotSpherical";
    case ErrorKind::BadInput: return "BadInput";
  }
  return "Error";
}

}  // namespace equivol
