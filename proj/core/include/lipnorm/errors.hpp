#pragma once

#include <stdexcept>
#include <string>

namespace lipnorm {

// Base for every error the library raises on bad input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input is well-formed but mathematically unacceptable: an invalid metric,
// a function outside the ball, a space mismatch, an infeasible polytope.
class DomainError : public Error {
public:
    using Error::Error;
};

// Vertex enumeration was asked to work above the configured dimension cap.
class CapExceeded : public DomainError {
public:
    CapExceeded(std::size_t dimension, std::size_t cap)
        : DomainError("dimension " + std::to_string(dimension) +
                      " exceeds the enumeration cap " + std::to_string(cap)),
          dimension_(dimension),
          cap_(cap) {}

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t dimension_;
    std::size_t cap_;
};

// Malformed textual input (rational literals, documents).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& message, std::string field = {})
        : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

}  // namespace lipnorm
