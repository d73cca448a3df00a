#ifndef MACHIN_ERRORS_HPP
#define MACHIN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace machin {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// An argument lies outside an operation's documented domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A result would leave the representable range (e.g. an angle sum
/// reaching pi/2 in arctan_add).
class RangeError : public Error {
public:
    using Error::Error;
};

/// A tangent evaluation hit a pole (zero real part of the Gaussian
/// product, i.e. the angle combination is pi/2 mod pi).
class PoleError : public Error {
public:
    using Error::Error;
};

/// The continued-fraction step terminated (remainder argument zero).
/// Impossible for a valid seed, so it signals bad input.
class DegenerateRatio : public Error {
public:
    using Error::Error;
};

/// Seed identity failed exact verification.
class SeedInvalid : public Error {
public:
    using Error::Error;
};

/// An adaptive-precision computation exhausted its budget before
/// reaching a conclusive answer.
class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

/// Text input did not match the expected grammar. `position` is the
/// byte offset of the first offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position(position) {}
    std::size_t position;
};

/// Outcome of a check that may be undecidable at finite precision.
/// Inconclusive is a first-class result: precision exhaustion is never
/// converted into a mathematical claim.
enum class Verdict { Holds, Fails, Inconclusive };

}  // namespace machin

#endif
