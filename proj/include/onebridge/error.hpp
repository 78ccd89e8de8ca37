#pragma once

#include <stdexcept>
#include <string>

namespace onebridge {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parameters violate a documented precondition (maps to CLI exit code 2).
class InvalidParameters : public Error {
public:
    using Error::Error;
};

/// Words built over different alphabets were combined.
class AlphabetMismatch : public Error {
public:
    using Error::Error;
};

/// A scripted elimination or rewrite did not cancel as expected.
class DerivationError : public Error {
public:
    using Error::Error;
};

/// Exact arithmetic could not be carried out (overflow, inexact division).
class ArithmeticError : public Error {
public:
    using Error::Error;
};

} // namespace onebridge
