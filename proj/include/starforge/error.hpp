#pragma once

#include <stdexcept>
#include <string>

namespace starforge {

// Base class for all starforge errors. Subclasses distinguish input problems
// (bad files, malformed data) from broken algebraic invariants detected at
// runtime, which usually indicate a bug upstream rather than bad user input.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two values live in scalar fields that cannot be merged (e.g. a formal
// parameter of one operand collides with a polynomial generator of the other).
class FieldMismatchError : public Error {
public:
    explicit FieldMismatchError(const std::string& msg) : Error(msg) {}
};

// Exact division by a power of the deformation parameter failed; a grading
// invariant was broken upstream.
class NotDivisibleError : public Error {
public:
    explicit NotDivisibleError(const std::string& msg) : Error(msg) {}
};

class ArityError : public Error {
public:
    explicit ArityError(const std::string& msg) : Error(msg) {}
};

class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// Structure constants fail skewsymmetry or the Jacobi identity.
class JacobiError : public Error {
public:
    explicit JacobiError(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace starforge
