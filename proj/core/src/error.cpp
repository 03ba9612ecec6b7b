#include "duplex/error.hpp"

namespace duplex {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::TruncationTooShallow: return "TruncationTooShallow";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::OutOfTruncation: return "OutOfTruncation";
    case ErrorKind::NotDuplicial: return "NotDuplicial";
    case ErrorKind::DiagramsFail: return "DiagramsFail";
    case ErrorKind::CoalgebraInvalid: return "CoalgebraInvalid";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::GroupoidTooLarge: return "GroupoidTooLarge";
    case ErrorKind::AdjunctionInvalid: return "AdjunctionInvalid";
    case ErrorKind::NotGroupoid: return "NotGroupoid";
    case ErrorKind::NoHom: return "NoHom";
    case ErrorKind::InversionFails: return "InversionFails";
    case ErrorKind::ConditionsFail: return "ConditionsFail";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace duplex
