#pragma once

#include <stdexcept>
#include <string>

namespace eigenfence {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input errors: malformed or inconsistent data supplied by the caller.
class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    using InputError::InputError;
};

class DimensionError : public InputError {
public:
    using InputError::InputError;
};

class InvalidEigenpairError : public InputError {
public:
    using InputError::InputError;
};

// Mathematical errors: well-formed input outside an operation's domain.
class MathError : public Error {
public:
    using Error::Error;
};

class SizeError : public MathError {
public:
    using MathError::MathError;
};

class OddSizeError : public SizeError {
public:
    using SizeError::SizeError;
};

class EvenSizeError : public SizeError {
public:
    using SizeError::SizeError;
};

class ZeroComponentError : public MathError {
public:
    using MathError::MathError;
};

class AllZeroError : public MathError {
public:
    using MathError::MathError;
};

class NoZeroError : public MathError {
public:
    using MathError::MathError;
};

class NotApplicableError : public MathError {
public:
    using MathError::MathError;
};

class NotConstantRowSumError : public MathError {
public:
    using MathError::MathError;
};

class OverflowError : public MathError {
public:
    using MathError::MathError;
};

class ViewportError : public MathError {
public:
    using MathError::MathError;
};

}  // namespace eigenfence
