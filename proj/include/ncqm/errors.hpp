#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncqm {

/// Closed set of domain error kinds; every library failure carries exactly one.
enum class ErrorKind {
  ParseError,
  UnknownCommand,
  UnsupportedStratum,
  UnsupportedDimension,
  DimensionMismatch,
  InadmissibleParams,
  ZeroHbar,
  LabelMismatch,
  DegenerateOmega,
  DegenerateLabel,
  NotPositiveDefinite,
  LengthMismatch,
  SingularMatrix,
  NotAntisymmetric,
  NotSymmetric,
};

/// Stable string form used in CLI reports.
std::string_view error_kind_name(ErrorKind kind);

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ncqm
