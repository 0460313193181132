#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace holecov {

enum class ErrorCode {
    InvalidInput,
    DegenerateGeometry,
    InsufficientSites,
    DuplicateSite,
    NotFound,
    InconsistentInput,
    PreconditionFailed,
    ParseError,
    IoError,
};

/// Stable kebab-case name used in CLI diagnostics.
constexpr std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidInput: return "invalid-input";
    case ErrorCode::DegenerateGeometry: return "degenerate-geometry";
    case ErrorCode::InsufficientSites: return "insufficient-sites";
    case ErrorCode::DuplicateSite: return "duplicate-site";
    case ErrorCode::NotFound: return "not-found";
    case ErrorCode::InconsistentInput: return "inconsistent-input";
    case ErrorCode::PreconditionFailed: return "precondition-failed";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::IoError: return "io-error";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message)
{
    throw Error(code, message);
}

} // namespace holecov
