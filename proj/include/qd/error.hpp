#pragma once

#include <stdexcept>
#include <string>

namespace qd {

// Mixed-field arithmetic, bad construction parameters.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Pole at the evaluation point, division by zero.
struct eval_error : std::runtime_error {
    explicit eval_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Unknown generators, malformed expressions or files.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Rewriting step budget exceeded.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation not defined for this kind of presentation (e.g. coproduct of a
// Heisenberg double into itself).
struct kind_error : std::runtime_error {
    explicit kind_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Module data violating a structural precondition (non-diagonal K action, ...).
struct rep_error : std::runtime_error {
    explicit rep_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Singular Gram matrix where a perfect pairing is required.
struct degenerate_pairing_error : std::runtime_error {
    explicit degenerate_pairing_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace qd
