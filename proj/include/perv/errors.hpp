#pragma once

#include <stdexcept>
#include <string>

namespace perv {

// Every failure the engine can report. The token name of the kind is part of
// the diagnostic output contract, so keep the spelling stable.
enum class ErrorKind {
    SyntaxError,
    UnknownKey,
    BadRational,
    DuplicateId,
    UnknownId,
    DegreeMismatch,
    CommutativityViolation,
    AssociativityViolation,
    UnitViolation,
    GradeOutOfRange,
    ProfileMismatch,
    ForeignVector,
    ZeroVector,
    MissingProduct,
    NoIntegral,
    DegeneratePairing,
    OracleMismatch,
    RepeatedLabel,
    ZeroMultiplicity,
    MissingGenus,
    GuardExceeded,
    BadInvocation,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace perv
