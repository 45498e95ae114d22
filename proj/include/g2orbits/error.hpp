#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace g2orbits {

enum class ErrorCode {
    InvalidInput,
    SumNonzero,
    NotInSpan,
    NotAutomorphism,
    NotClosed,
    NotDerivation,
    Internal,
};

std::string_view to_string(ErrorCode code);

/// Raised for precondition failures and broken internal invariants. Internal
/// means a mathematical invariant of the construction failed and the result
/// must not be trusted.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    [[nodiscard]] ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput: return "INVALID_INPUT";
        case ErrorCode::SumNonzero: return "SUM_NONZERO";
        case ErrorCode::NotInSpan: return "NOT_IN_SPAN";
        case ErrorCode::NotAutomorphism: return "NOT_AUTOMORPHISM";
        case ErrorCode::NotClosed: return "NOT_CLOSED";
        case ErrorCode::NotDerivation: return "NOT_DERIVATION";
        case ErrorCode::Internal: return "INTERNAL";
    }
    return "UNKNOWN";
}

}  // namespace g2orbits
