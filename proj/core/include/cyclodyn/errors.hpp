#pragma once

#include <stdexcept>
#include <string>

namespace cyclodyn {

// Base class for every failure the library signals. Each subclass maps onto
// one named error condition in the public contracts.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
  public:
    DivisionByZero() : Error("division by zero") {}
};

class InvalidPlace : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at offset " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

class PreconditionViolated : public Error {
  public:
    using Error::Error;
};

class TreeBudgetExceeded : public Error {
  public:
    using Error::Error;
};

class HypothesisNotMet : public Error {
  public:
    using Error::Error;
};

class PrecisionExhausted : public Error {
  public:
    using Error::Error;
};

// A linear-map witness exists over the algebraic closure but the scaling it
// needs was not found among cyclotomic fields up to the configured conductor.
class ScalingOutsideSearchSpace : public Error {
  public:
    using Error::Error;
};

}  // namespace cyclodyn
