#include "odo/error.hpp"

namespace odo {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ImageNotContained: return "ImageNotContained";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::NotWellDefined: return "NotWellDefined";
    case Errc::NotStabilized: return "NotStabilized";
    case Errc::LevelOutOfRange: return "LevelOutOfRange";
    case Errc::TailRequired: return "TailRequired";
    case Errc::WrongGroupKind: return "WrongGroupKind";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotPartition: return "NotPartition";
    case Errc::LevelMismatch: return "LevelMismatch";
    case Errc::LevelTooSmall: return "LevelTooSmall";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case Errc::UnknownGroupKind: return "UnknownGroupKind";
    case Errc::BadDepth: return "BadDepth";
    case Errc::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace odo
