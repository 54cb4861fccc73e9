#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symprime {

// Thrown when a requested table would exceed the configured memory budget.
// Carries the size that would have been needed so callers can report it.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& msg, uint64_t required_bytes, uint64_t budget_bytes)
        : std::runtime_error(msg),
          required_bytes_(required_bytes),
          budget_bytes_(budget_bytes) {}

    uint64_t required_bytes() const noexcept { return required_bytes_; }
    uint64_t budget_bytes() const noexcept { return budget_bytes_; }

private:
    uint64_t required_bytes_;
    uint64_t budget_bytes_;
};

// Thrown when adaptive quadrature runs out of subdivision budget before
// reaching the requested tolerance. Carries the best estimate reached and
// the error estimate achieved at that point.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& msg, double best_estimate, double achieved_error)
        : std::runtime_error(msg),
          best_estimate_(best_estimate),
          achieved_error_(achieved_error) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double achieved_error() const noexcept { return achieved_error_; }

private:
    double best_estimate_;
    double achieved_error_;
};

} // namespace symprime
