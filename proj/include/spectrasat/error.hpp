#pragma once

#include <stdexcept>
#include <string>

namespace spectrasat {

// Invalid input, config, or file content. The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Failure while executing an otherwise valid request (I/O, divergence, ...).
// The CLI maps this to exit code 2.
class RuntimeError : public std::runtime_error {
public:
    explicit RuntimeError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace spectrasat
