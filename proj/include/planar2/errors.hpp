#pragma once

#include <stdexcept>
#include <string>

namespace planar2 {

// Input too large / parameter outside the supported range (CLI exit code 2).
struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural property that must hold failed (CLI exit code 4).
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline void guard(bool cond, const std::string& msg) {
    if (!cond) throw GuardError(msg);
}

inline void internal_check(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
}

}  // namespace planar2
