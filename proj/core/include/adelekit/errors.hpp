#pragma once

#include <stdexcept>
#include <string>

namespace adelekit {

// Every domain failure carries one of these codes so callers (and the CLI,
// which serializes them to stderr JSON) can dispatch without string matching.
enum class Errc {
  ZeroHasNoExponent,
  NotPrime,
  BadBase,
  KindPlaceMismatch,
  NotSquarefree,
  DegenerateD,
  NotIntegral,
  PrecisionTooLow,
  BadPlace,
  PlaceMismatch,
  CannotInvert,
  IndeterminateValuation,
  InsufficientPrecision,
  FieldMismatch,
  NotSAdele,
  NotInOpen,
  ZeroRadius,
  BudgetExceeded,
  ParseError,
};

const char* errc_name(Errc code);

class DomainError : public std::runtime_error {
 public:
  DomainError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw DomainError(code, what);
}

}  // namespace adelekit
