#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace triality {

/// Stable error identifiers. The string names returned by error_code_name()
/// are part of the command-line and C API contract and must not change.
enum class ErrorCode {
  ParseError,
  ScalarModeMismatch,
  DivisionByZero,
  IsotropicVector,
  NotASimilitude,
  InvalidTriple,
  NonSquareSpinorNorm,
  ZeroScalar,
  WrongRank,
  RankMismatch,
  RankTooSmall,
  DeterminantMismatch,
  NeedsHalfPowerMode,
  NotPGSp6Param,
  WeightConstraintViolated,
  MissingSatakeData,
  ShapeInvalid,
  DegreeMismatch,
  SizeMismatch,
  CentralCharacterMismatch,
  NotG2Type,
  PoleAt,
  MissingSelfdualType,
  MissingRootNumber,
  UnknownCommand,
  Unsupported,
};

std::string_view error_code_name(ErrorCode code);

/// True for errors that originate in malformed input rather than in the
/// mathematics (these map to exit status 2 on the command line).
bool is_parse_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Input error carrying a JSON-pointer location such as "/chi/2".
class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& reason)
      : Error(ErrorCode::ParseError, location + ": " + reason),
        location_(std::move(location)),
        reason_(reason) {}
  const std::string& location() const noexcept { return location_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string location_;
  std::string reason_;
};

}  // namespace triality
