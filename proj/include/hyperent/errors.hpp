#pragma once

#include <stdexcept>
#include <string>

namespace hyperent {

// Bad input: caller passed something the operation cannot accept.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The numerics themselves failed (no convergence, no root in bracket).
class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotHermitian : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class DimensionMismatch : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class NotNormalized : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class InvalidState : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class InvalidRange : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class NoConvergence : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

class NoSignChange : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

} // namespace hyperent
