#include "qaskey/error.hpp"

namespace qaskey {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::DegreeExceedsN: return "DegreeExceedsN";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::SingularCoefficient: return "SingularCoefficient";
    case ErrorKind::NegativeProduct: return "NegativeProduct";
    case ErrorKind::EigenFailure: return "EigenFailure";
    case ErrorKind::DegenerateGrid: return "DegenerateGrid";
    case ErrorKind::ZeroProbe: return "ZeroProbe";
    case ErrorKind::NonConstantRatio: return "NonConstantRatio";
    case ErrorKind::FitUnstable: return "FitUnstable";
  }
  return "Unknown";
}

NumericError::NumericError(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace qaskey
