#include "glnq/error.hpp"

namespace glnq {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotPrimePower: return "NotPrimePower";
        case ErrorKind::FieldTooLarge: return "FieldTooLarge";
        case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
        case ErrorKind::ZeroInput: return "ZeroInput";
        case ErrorKind::NotInSubfield: return "NotInSubfield";
        case ErrorKind::NotIrreducible: return "NotIrreducible";
        case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
        case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
        case ErrorKind::NotMonic: return "NotMonic";
        case ErrorKind::NormMismatch: return "NormMismatch";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::Singular: return "Singular";
        case ErrorKind::GroupTooLarge: return "GroupTooLarge";
        case ErrorKind::InexactDivision: return "InexactDivision";
        case ErrorKind::NotRegularSemisimple: return "NotRegularSemisimple";
        case ErrorKind::OrthogonalityFailure: return "OrthogonalityFailure";
        case ErrorKind::RangeError: return "RangeError";
        case ErrorKind::DivisibilityViolation: return "DivisibilityViolation";
        case ErrorKind::UnsupportedTarget: return "UnsupportedTarget";
        case ErrorKind::HypothesisViolation: return "HypothesisViolation";
        case ErrorKind::InexactResult: return "InexactResult";
        case ErrorKind::InsufficientSamples: return "InsufficientSamples";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

bool is_budget_error(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::FieldTooLarge:
        case ErrorKind::EnumerationTooLarge:
        case ErrorKind::GroupTooLarge:
        case ErrorKind::TooLarge:
            return true;
        default:
            return false;
    }
}

}  // namespace glnq
