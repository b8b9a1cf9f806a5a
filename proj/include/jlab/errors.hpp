#pragma once

#include <stdexcept>
#include <string>

namespace jlab {

// Exit-code taxonomy used by the CLI: validation errors map to 2,
// budget refusals to 3, internal invariant violations to 4.

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw ValidationError(what);
}

inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw InternalError(what);
}

} // namespace jlab
