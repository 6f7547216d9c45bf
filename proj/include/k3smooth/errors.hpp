#pragma once

#include <stdexcept>
#include <string>

namespace k3smooth {

// Base for everything thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Violated precondition on user-supplied data (bad syntax, wrong degree,
// odd intersection number, non-saturated input, ...). CLI exit code 2.
struct InputError : Error {
    explicit InputError(const std::string& what) : Error(what) {}
};

// Broken internal invariant. Reaching this is a bug. CLI exit code 1.
struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace k3smooth
