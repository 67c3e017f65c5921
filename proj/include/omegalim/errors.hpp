#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace omegalim {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Lexical/grammar failure; `offset` is the byte position in the source text.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

// Index symbol used in the wrong context ('n' in a class expression,
// 'w' in a sequence expression).
class ContextError : public ParseError {
public:
  ContextError(const std::string& msg, std::size_t offset)
      : ParseError(msg, offset) {}
};

// The requested expansion depth runs into a bounded oscillating residue.
class OscillatoryError : public Error {
public:
  using Error::Error;
};

// Division by a zero limit, logarithm of a non-positive value, and similar.
class UndefinedError : public Error {
public:
  using Error::Error;
};

class DivisionByZero : public UndefinedError {
public:
  using UndefinedError::UndefinedError;
};

// Numeric evaluation left the domain of a real elementary function.
class DomainError : public UndefinedError {
public:
  using UndefinedError::UndefinedError;
};

class NotPurelyInfinite : public Error {
public:
  using Error::Error;
};

class NonPositiveLeading : public Error {
public:
  using Error::Error;
};

class FeedbackConditionViolated : public Error {
public:
  using Error::Error;
};

// Operation on tower atoms outside the supported mul/div/pow fragment.
class TowerArithmeticError : public Error {
public:
  using Error::Error;
};

class TowerAtomNotEvaluable : public DomainError {
public:
  using DomainError::DomainError;
};

class NoStableCandidate : public Error {
public:
  using Error::Error;
};

}  // namespace omegalim
