#pragma once

#include <stdexcept>
#include <string>

namespace flowspec {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input files or option values.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// An operation was called outside its contract (disconnected graph,
/// zero weights where forbidden, nonzero intersection number, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// An iterative method did not reach its tolerance where that is fatal.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& what) : Error(what) {}
};

/// A machine-checked guarantee failed; indicates a bug, not bad input.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw PreconditionError(what);
}

inline void check_internal(bool cond, const std::string& what) {
    if (!cond) throw InternalError(what);
}

} // namespace flowspec
