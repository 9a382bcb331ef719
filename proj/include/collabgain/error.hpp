#pragma once

#include <stdexcept>
#include <string>

namespace collabgain {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside an operation's domain (non-finite, wrong sign, empty grid, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A link the requested computation depends on has zero gain.
class DeadLinkError : public Error {
public:
    explicit DeadLinkError(std::string link)
        : Error("dead link " + link), link_(std::move(link)) {}

    const std::string& link() const noexcept { return link_; }

private:
    std::string link_;
};

/// A numerical procedure could not produce an answer.
class SolverError : public Error {
public:
    using Error::Error;
};

/// Required rate is not below the protocol's feasibility bound.
class InfeasibleError : public Error {
public:
    InfeasibleError(std::string message, double rate, double bound)
        : Error(std::move(message)), rate_(rate), bound_(bound) {}

    double rate() const noexcept { return rate_; }
    double bound() const noexcept { return bound_; }

private:
    double rate_;
    double bound_;
};

/// Node geometry that yields zero distances or gains beyond the overflow guard.
class GeometryError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

}  // namespace collabgain
