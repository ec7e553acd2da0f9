#include "gspin/error.hpp"

namespace gspin {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoUnit: return "NoUnit";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::MissingUnit: return "MissingUnit";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::NotInH: return "NotInH";
    case ErrorKind::OutOfInterval: return "OutOfInterval";
    case ErrorKind::IntervalShapeError: return "IntervalShapeError";
    case ErrorKind::DimensionCap: return "DimensionCap";
    case ErrorKind::NotAQuasiBasis: return "NotAQuasiBasis";
    case ErrorKind::NotSelfAdjoint: return "NotSelfAdjoint";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, nlohmann::json witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

}  // namespace gspin
