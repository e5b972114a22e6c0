#pragma once

#include <stdexcept>
#include <string>

namespace twconj {

enum class ErrorKind {
  NotClosed,
  NoIdentity,
  NotAssociative,
  NoInverse,
  UnknownPreset,
  OrderCapExceeded,
  NotAHomomorphism,
  DomainMismatch,
  ImagesDoNotCommute,
  SearchBudgetExceeded,
  CommutingConditionViolated,
  FactorMismatch,
  FactorsNotIdentical,
  NotAutomorphism,
  NotNormal,
  NotInvariant,
  HypothesisViolated,
  InvalidInput,
};

const char* error_kind_name(ErrorKind kind);

/// All library failures carry a kind tag plus a message naming the witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace twconj
