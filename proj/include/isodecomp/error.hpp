#ifndef ISODECOMP_ERROR_HPP
#define ISODECOMP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace isodecomp {

enum class ErrorCode {
    // input validation
    Parse,
    NotFullDimensional,
    IncidenceMismatch,
    NotConvexPosition,
    DimensionMismatch,
    NonSquare,
    // preconditions of individual operations
    OriginNotInterior,
    SingularMatrix,
    DegeneratePolytope,
    UnsupportedDegree,
    EpsilonTooLarge,
    NotCentered,
    NotIsotropic,
    StepTooLarge,
    Degenerate,
    CaseNotSupported,
    NotASymmetry,
    GroupTooLarge,
    NotFacewiseAffine,
};

std::string_view error_name(ErrorCode code);

/// True for codes that describe malformed or inconsistent input data
/// (as opposed to a well-formed input that violates an operation's
/// precondition).
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace isodecomp

#endif // ISODECOMP_ERROR_HPP
