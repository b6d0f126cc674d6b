#pragma once

#include <stdexcept>
#include <string>

namespace hcert {

/// Malformed arguments or inputs that violate an operation's preconditions.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A requested size does not fit the 64-bit index space or a materialization budget.
class SizingError : public std::length_error {
public:
    explicit SizingError(const std::string& what) : std::length_error(what) {}
};

/// A certificate could not be issued soundly (non-converged eigensolve, work budget).
class CertificateRefused : public std::runtime_error {
public:
    explicit CertificateRefused(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hcert
