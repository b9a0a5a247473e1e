#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace indub {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `offset` is a byte offset for graph6 and a
/// 1-based line number for line-oriented formats.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Input that is well formed but outside an operation's domain
/// (bad parameters, disconnected graph where connectivity is needed, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An idempotent has exactly two entry values but the induced 01 matrix
/// is not an equal-class equivalence relation. Exact arithmetic rules this
/// out, so it points at numerical trouble.
class StructuralViolation : public Error {
public:
    using Error::Error;
};

/// The spectral and combinatorial routes disagree on a claim that holds
/// in exact arithmetic.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace indub
