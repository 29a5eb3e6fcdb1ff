#include "ncqm/errors.hpp"

namespace ncqm {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
    case ErrorKind::UnsupportedStratum: return "Unsupported stratum";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InadmissibleParams: return "InadmissibleParams";
    case ErrorKind::ZeroHbar: return "ZeroHbar";
    case ErrorKind::LabelMismatch: return "LabelMismatch";
    case ErrorKind::DegenerateOmega: return "DegenerateOmega";
    case ErrorKind::DegenerateLabel: return "DegenerateLabel";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
  }
  return "UnknownError";
}

}  // namespace ncqm
