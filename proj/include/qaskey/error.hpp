#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qaskey {

/// Numeric failure modes. Parameter-type violations (e.g. q outside (0,1))
/// are reported separately as std::invalid_argument.
enum class ErrorKind {
  DenominatorVanishes,
  ZeroArgument,
  DegreeExceedsN,
  OutOfRange,
  SingularCoefficient,
  NegativeProduct,
  EigenFailure,
  DegenerateGrid,
  ZeroProbe,
  NonConstantRatio,
  FitUnstable,
};

std::string_view to_string(ErrorKind kind);

class NumericError : public std::runtime_error {
 public:
  NumericError(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qaskey
