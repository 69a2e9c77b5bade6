#pragma once

#include <stdexcept>
#include <string>

namespace weylwalk {

// Bad user input: malformed configs, out-of-range parameters. CLI exit code 2.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A violated internal invariant. CLI exit code 3.
class invariant_error : public std::logic_error {
public:
    explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw config_error(msg);
}

inline void check_invariant(bool cond, const std::string& msg) {
    if (!cond) throw invariant_error(msg);
}

} // namespace weylwalk
