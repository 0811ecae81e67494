#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace glnq {

enum class ErrorKind {
    NotPrimePower,
    FieldTooLarge,
    DegreeOutOfRange,
    ZeroInput,
    NotInSubfield,
    NotIrreducible,
    EnumerationTooLarge,
    ZeroConstantTerm,
    NotMonic,
    NormMismatch,
    SizeMismatch,
    Singular,
    GroupTooLarge,
    InexactDivision,
    NotRegularSemisimple,
    OrthogonalityFailure,
    RangeError,
    DivisibilityViolation,
    UnsupportedTarget,
    HypothesisViolation,
    InexactResult,
    InsufficientSamples,
    TooLarge,
    InvalidInput,
};

std::string_view to_string(ErrorKind kind);

// Budget refusals are distinguished so callers (the CLI) can map them to a dedicated exit code.
bool is_budget_error(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

}  // namespace glnq
