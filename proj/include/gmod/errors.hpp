#pragma once

#include <stdexcept>
#include <string>

namespace gmod {

// An instance exceeds a configured desk-scale cap (exact solvers refuse
// rather than running unbounded).
struct ResourceCapError : std::runtime_error {
    explicit ResourceCapError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace gmod
