#pragma once

#include <stdexcept>
#include <string>

namespace pqga {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands have incompatible dimensions.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// A matrix required to be unitary is not, at the checked tolerance.
class NotUnitary : public Error {
public:
    using Error::Error;
};

// A state vector required to be normalized is not.
class NotNormalized : public Error {
public:
    using Error::Error;
};

// A basis index, gate index, or qubit index is out of its valid range.
class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

// A program does not fit into the available register slots.
class ProgramTooLong : public Error {
public:
    using Error::Error;
};

// A supplied index map is not a bijection.
class NotBijective : public Error {
public:
    using Error::Error;
};

// The machine broke one of its own guarantees (product-form output,
// program restoration). Indicates a bug, not a user error.
class ContractViolation : public Error {
public:
    using Error::Error;
};

// A file or textual input could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace pqga
