#pragma once

#include <stdexcept>
#include <string>

namespace jobgap {

// Usage / configuration problems: bad flags, unreadable config, missing
// sources. The CLI maps these to exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Problems in the data itself: malformed records, invariant violations,
// unwritable outputs. The CLI maps these to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace jobgap
