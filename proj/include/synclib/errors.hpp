#pragma once

#include <stdexcept>
#include <string>

namespace synclib {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A word contains a letter index outside the automaton's alphabet.
class InvalidWordError : public Error {
 public:
  using Error::Error;
};

// Operation requires a synchronizing automaton.
class NotSynchronizingError : public Error {
 public:
  using Error::Error;
};

// A breadth-first search exceeded its node budget.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// An exhaustive search proved that the operation's premise does not hold.
class PremiseViolatedError : public Error {
 public:
  using Error::Error;
};

// Caller violated a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Optimizer input outside the feasible region.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Malformed automaton text; carries the 1-based input line.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line)
      : Error(message + " at line " + std::to_string(line)), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace synclib
