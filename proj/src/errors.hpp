#pragma once

#include <stdexcept>
#include <string>

namespace latif {

// File parsing / stream failures. Maps to LATIF_ERROR_IO at the C boundary.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Solver breakdown or non-finite arithmetic. Carries the best residual
// reached so callers can report how close the solve got.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& msg, double residual)
        : std::runtime_error(msg), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_ = 0.0;
};

}  // namespace latif
