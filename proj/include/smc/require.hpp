#pragma once

#include <stdexcept>
#include <string>

namespace smc {

// Structural invariants are always checked; the instances are desk-scale and
// a silent inconsistency in a rotation system is far more expensive than the
// check.  Violations throw: there is no meaningful way to continue.
inline void require(bool condition, const std::string& what) {
    if (!condition) {
        throw std::runtime_error("invariant violated: " + what);
    }
}

[[noreturn]] inline void fail(const std::string& what) {
    throw std::runtime_error(what);
}

}  // namespace smc
