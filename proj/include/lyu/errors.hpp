#ifndef LYU_ERRORS_HPP
#define LYU_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lyu {

// Malformed or out-of-contract input (CLI exit code 1).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& m) : std::runtime_error(m) {}
};

// A configurable resource budget was exceeded (CLI exit code 2).
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& m) : std::runtime_error(m) {}
};

// A structural invariant failed where it must hold (CLI exit code 3).
struct PropertyViolation : std::runtime_error {
    explicit PropertyViolation(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace lyu

#endif
