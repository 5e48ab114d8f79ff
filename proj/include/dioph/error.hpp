#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dioph {

/// Machine-readable failure categories.  Every thrown dioph::Error carries
/// exactly one of these, so callers (and the CLI JSON layer) can dispatch on
/// the code instead of parsing messages.
enum class ErrorCode {
    BadInput,           // malformed equation, point, or parameter
    DimensionMismatch,  // point length does not match the ambient dimension
    NotInMonoid,        // point fails the congruence or has a negative entry
    NoInverse,          // modular inverse requested for a non-unit
    Overflow,           // 64-bit arithmetic would wrap
    InfiniteQuotient,   // quotient lattice has positive rank
    BoxTooLarge,        // enumeration volume exceeds the guard
    NotTwoDimensional,  // closed form asked for outside r = 3
    ZeroCoefficient,    // closed form asked for with a coefficient = 0 mod c
    NotInApery,         // operand is not an element of the Apery table
    TooManyExtras,      // Elliott scheme needs more than two non-ray atoms
    SchemeInconsistent, // Elliott lookup failed; indicates an internal bug
    NotAGroup,          // Cayley table violates a group axiom
    SpecMismatch,       // carry-monoid element does not fit the spec
    MethodMismatch,     // independent computations of the same set disagree
    Internal,           // invariant that must hold by construction failed
};

constexpr std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotInMonoid: return "NotInMonoid";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InfiniteQuotient: return "InfiniteQuotient";
    case ErrorCode::BoxTooLarge: return "BoxTooLarge";
    case ErrorCode::NotTwoDimensional: return "NotTwoDimensional";
    case ErrorCode::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorCode::NotInApery: return "NotInApery";
    case ErrorCode::TooManyExtras: return "TooManyExtras";
    case ErrorCode::SchemeInconsistent: return "SchemeInconsistent";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::MethodMismatch: return "MethodMismatch";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code), message_(message) {}

    ErrorCode code() const noexcept { return code_; }

    /// The message without the code prefix that what() carries.
    const std::string& message() const noexcept { return message_; }

private:
    ErrorCode code_;
    std::string message_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace dioph
