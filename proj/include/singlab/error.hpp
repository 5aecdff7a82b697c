#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace singlab {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the input was violated (bad range, non-prime modulus, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An exhaustive enumeration would exceed the configured cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A post-hoc self check failed. Indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, std::size_t offset)
        : ValidationError(what + " at byte " + std::to_string(offset)), offset_(offset) {}

    [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

namespace detail {

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw ValidationError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
}

}  // namespace detail
}  // namespace singlab
