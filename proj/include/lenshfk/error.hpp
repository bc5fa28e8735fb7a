#pragma once

#include <stdexcept>
#include <string>

namespace lens {

// All library failures are typed exceptions.  InputError covers anything a
// caller can trigger with bad data; InternalError marks broken invariants
// that indicate a bug in the library itself (exit code 1 at the CLI, versus
// 2 for input problems).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : Error {
    using Error::Error;
};
struct InternalError : Error {
    using Error::Error;
};

struct BadParams : InputError {
    using InputError::InputError;
};
struct NotEmbedded : InputError {
    using InputError::InputError;
};
struct NotCellular : InputError {
    using InputError::InputError;
};
struct BasepointOnCurve : InputError {
    using InputError::InputError;
};
struct BetaNullHomologous : InputError {
    using InputError::InputError;
};
struct IllegalSite : InputError {
    using InputError::InputError;
};
struct NotLSpaceAdmissible : InputError {
    using InputError::InputError;
};
struct SlopeTooSmall : InputError {
    using InputError::InputError;
};
struct ParseError : InputError {
    using InputError::InputError;
};

struct NotASquareZero : InternalError {
    using InternalError::InternalError;
};
struct NoDomain : InternalError {
    using InternalError::InternalError;
};
struct NegativeRank : InternalError {
    using InternalError::InternalError;
};

}  // namespace lens
