#pragma once

#include <stdexcept>
#include <string>

namespace hyperconv {

enum class ErrorKind {
  NotATopology,
  InconsistentSpec,
  SizeTooLarge,
  NotCentered,
  NotMonotone,
  ArityMismatch,
  DegenerateAlpha,
  EmptySpace,
  EmptyKernel,
  NoSupremum,
  NotACover,
  UnknownLaw,
  NotIsotone,
  EmptyBase,
  TruncationInsufficient,
  NotSolid,
  NonPositiveSlope,
  CarrierTooLarge,
  BadInput,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace hyperconv
