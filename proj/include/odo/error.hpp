#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace odo {

enum class Errc {
  InvalidArgument,
  ImageNotContained,
  DomainMismatch,
  NotWellDefined,
  NotStabilized,
  LevelOutOfRange,
  TailRequired,
  WrongGroupKind,
  BudgetExceeded,
  NotPartition,
  LevelMismatch,
  LevelTooSmall,
  NotDivisible,
  NotStrictlyIncreasing,
  UnknownGroupKind,
  BadDepth,
  InvariantViolation,
};

std::string_view errc_name(Errc code);

/// Every library failure is reported through this type; `code()` is the
/// stable, machine-readable part and is what the CLI serializes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace odo
