#pragma once

#include <stdexcept>
#include <string>

namespace qfock {

/// Bad command-line or API parameter (wrong parity of p, negative bound, ...).
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Requested window is too small to answer the question reliably.
class WindowTooSmallError : public std::runtime_error {
public:
    explicit WindowTooSmallError(const std::string& what) : std::runtime_error(what) {}
};

/// Operation that is deliberately not provided (see the call site's docs).
class UnsupportedOperation : public std::logic_error {
public:
    explicit UnsupportedOperation(const std::string& what) : std::logic_error(what) {}
};

} // namespace qfock
