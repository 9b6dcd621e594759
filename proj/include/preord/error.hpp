#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace preord {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands live on carriers of different sizes.
class CarrierMismatch : public Error {
public:
    using Error::Error;
};

// A value would break a type invariant (e.g. a non-transitive "preorder").
class InvariantViolation : public Error {
public:
    using Error::Error;
};

// An operation was called outside its documented domain.
class PreconditionViolation : public Error {
public:
    using Error::Error;
};

// An exhaustive enumeration was asked to go past its hard cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t line, std::string field)
        : Error(format(message, line, field)), line_(line), field_(std::move(field)) {}

    // 0 when the error is not tied to a source line.
    std::size_t line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    static std::string format(const std::string& message, std::size_t line, const std::string& field) {
        std::string out;
        if (line) out += "line " + std::to_string(line) + ": ";
        if (!field.empty()) out += field + ": ";
        return out + message;
    }

    std::size_t line_;
    std::string field_;
};

}  // namespace preord
