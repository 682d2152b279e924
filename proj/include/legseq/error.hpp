#pragma once

#include <stdexcept>
#include <string>

namespace legseq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input (polynomials, sequence files, residue lists).
class ParseError : public Error {
public:
    using Error::Error;
};

/// An exact computation would exceed the configured work budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

} // namespace legseq
