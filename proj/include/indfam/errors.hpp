#pragma once

#include <stdexcept>
#include <string>

namespace indfam {

// Invalid arguments: out-of-range parameters, mismatched Params, bad input.
struct param_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Instance does not fit the configured bit-vector width.
struct capacity_error : std::length_error {
    using std::length_error::length_error;
};

// Search exceeded its node or wall-clock cap.  `partial_bound` is the best
// lower bound proven before the cap was hit (-1 when none).
struct budget_error : std::runtime_error {
    long long partial_bound;
    explicit budget_error(const std::string& what, long long bound = -1)
        : std::runtime_error(what), partial_bound(bound) {}
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace indfam
