#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gencase {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : Error {
    using Error::Error;
};

// Exact enumeration requested where none is available (unknown count or cap exceeded).
struct EnumerationUnavailableError : Error {
    using Error::Error;
};

struct SamplerUnavailableError : Error {
    using Error::Error;
};

// Sphere (or ball) of cardinality zero; frequencies are left undefined instead of 0/0.
struct EmptySphereError : Error {
    using Error::Error;
};

struct CapExceededError : Error {
    using Error::Error;
};

struct ZeroMassError : Error {
    using Error::Error;
};

struct NonConvergenceError : Error {
    NonConvergenceError(const std::string& msg, double last, double previous)
        : Error(msg), last_estimate(last), previous_estimate(previous) {}
    double last_estimate;
    double previous_estimate;
};

struct PremiseViolationError : Error {
    PremiseViolationError(const std::string& msg, std::uint64_t at_n) : Error(msg), n(at_n) {}
    std::uint64_t n;
};

struct SyntaxError : Error {
    SyntaxError(const std::string& msg, std::size_t at_position)
        : Error(msg + " (at symbol " + std::to_string(at_position) + ")"), position(at_position) {}
    std::size_t position;
};

}  // namespace gencase
