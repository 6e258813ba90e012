#pragma once

#include <stdexcept>
#include <string>

namespace annulus {

/// Base for every error raised by the library. Carries the name of the
/// offending input field so front ends can report it verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// A numeric precondition failed: radius outside the ring, overflow guard,
/// lambda cutoff rule, quadrature sizes.
class GuardError : public Error {
public:
    using Error::Error;
};

/// Input did not match the expected structure (JSON/CSV layout, lengths,
/// non-finite numbers).
class SchemaError : public Error {
public:
    using Error::Error;
};

}  // namespace annulus
