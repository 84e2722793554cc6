#ifndef YANG_ERRORS_HPP
#define YANG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace yang {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

/// Raised by exact division; carries the textual form of the nonzero remainder.
class NotDivisible : public Error {
public:
  explicit NotDivisible(std::string remainder)
      : Error("not divisible, remainder " + remainder),
        remainder_(std::move(remainder)) {}
  const std::string& remainder() const noexcept { return remainder_; }

private:
  std::string remainder_;
};

class InsufficientDepth : public Error {
public:
  using Error::Error;
};

class UnknownVariable : public Error {
public:
  explicit UnknownVariable(const std::string& name)
      : Error("unknown variable '" + name + "'") {}
};

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// A sum that must reduce to a polynomial kept a nontrivial denominator.
class CancellationFailure : public Error {
public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
public:
  using Error::Error;
};

class ArityMismatch : public Error {
public:
  using Error::Error;
};

class MixedBasisUnsupported : public Error {
public:
  MixedBasisUnsupported()
      : Error("pairing of two weight-lattice vectors is not defined") {}
};

class NonMonicDenominator : public Error {
public:
  using Error::Error;
};

}  // namespace yang

#endif
