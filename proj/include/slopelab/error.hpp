#pragma once

#include <stdexcept>
#include <string>

namespace slopelab {

enum class Errc {
  InvalidArgument,
  Parse,
  DivisionByZero,
  ZeroPolynomial,
  IllegalSubstitution,
  BudgetExceeded,
  NotMonomial,
  DimensionCap,
  CertificateRejected,
  InexactNubar,
  UnknownKernel,
  NotALambdaSequence,
  NotApplicable,
  NotMonic,
  BadDegree,
  PointNotSingular,
  RoundsExhausted,
  CharDividesDegree,
  Inconsistent,
};

const char* errc_name(Errc code) noexcept;

// All library failures are reported through this type; code() identifies the
// contract violation, what() carries a human-readable explanation.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace slopelab
