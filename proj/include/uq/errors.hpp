#pragma once

#include <stdexcept>
#include <string>

namespace uq {

struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : MathError {
    DivisionByZero() : MathError("division by zero") {}
};

// eval_at: the denominator vanishes at the evaluation point.
struct PoleError : MathError {
    explicit PoleError(const std::string& at)
        : MathError("pole at q = " + at) {}
};

struct CapExceeded : MathError {
    int degree;
    explicit CapExceeded(int deg)
        : MathError("degree cap exceeded: intermediate degree " +
                    std::to_string(deg)),
          degree(deg) {}
};

struct ParseError : MathError {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& what)
        : MathError("parse error at position " + std::to_string(pos) + ": " +
                    what),
          position(pos) {}
};

struct InvalidArgument : MathError {
    using MathError::MathError;
};

// A computation contradicted an invariant the theory guarantees.
struct ConsistencyError : MathError {
    using MathError::MathError;
};

}  // namespace uq
