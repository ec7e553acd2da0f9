#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

namespace gspin {

enum class ErrorKind {
  MalformedTable,
  OutOfRange,
  NotAssociative,
  NoUnit,
  NoInverse,
  MissingUnit,
  NotClosed,
  NotNormal,
  NotASubgroup,
  UnknownFamily,
  ParameterOutOfRange,
  ContextMismatch,
  NotInH,
  OutOfInterval,
  IntervalShapeError,
  DimensionCap,
  NotAQuasiBasis,
  NotSelfAdjoint,
  ConfigError,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying a machine-readable kind and, where one exists, the
/// witnessing data (offending triple, element, pair ...) as JSON.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, nlohmann::json witness = nullptr);

  ErrorKind kind() const noexcept { return kind_; }
  const nlohmann::json& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  nlohmann::json witness_;
};

}  // namespace gspin
