#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcramer {

enum class ErrorKind {
    domain,
    shape_mismatch,
    singular,
    size_cap,
    backend_mismatch,
    unsupported_mode,
    contract_violation,
    parse,
    io,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::shape_mismatch: return "shape_mismatch";
    case ErrorKind::singular: return "singular";
    case ErrorKind::size_cap: return "size_cap";
    case ErrorKind::backend_mismatch: return "backend_mismatch";
    case ErrorKind::unsupported_mode: return "unsupported_mode";
    case ErrorKind::contract_violation: return "contract_violation";
    case ErrorKind::parse: return "parse";
    case ErrorKind::io: return "io";
    }
    return "unknown";
}

/// Base exception for every failure raised by the library. The kind is a
/// stable machine-readable code; what() is a one-line human message.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised when a determinant that must be nonzero vanishes. Carries the
/// offending determinant in scalar text form.
class SingularError : public Error {
public:
    SingularError(const std::string& message, std::string det_value)
        : Error(ErrorKind::singular, message), det_value_(std::move(det_value)) {}

    const std::string& det_value() const noexcept { return det_value_; }

private:
    std::string det_value_;
};

}  // namespace qcramer
