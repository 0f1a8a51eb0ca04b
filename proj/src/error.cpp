#include "isodecomp/error.hpp"

namespace isodecomp {

std::string_view error_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::IncidenceMismatch: return "IncidenceMismatch";
    case ErrorCode::NotConvexPosition: return "NotConvexPosition";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DegeneratePolytope: return "DegeneratePolytope";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::EpsilonTooLarge: return "EpsilonTooLarge";
    case ErrorCode::NotCentered: return "NotCentered";
    case ErrorCode::NotIsotropic: return "NotIsotropic";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::CaseNotSupported: return "CaseNotSupported";
    case ErrorCode::NotASymmetry: return "NotASymmetry";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::NotFacewiseAffine: return "NotFacewiseAffine";
    }
    return "Unknown";
}

bool is_validation_error(ErrorCode code)
{
    switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::NotFullDimensional:
    case ErrorCode::IncidenceMismatch:
    case ErrorCode::NotConvexPosition:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::NonSquare:
        return true;
    default:
        return false;
    }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code)
{
}

} // namespace isodecomp
