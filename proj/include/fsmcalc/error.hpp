#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fsmcalc {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands were built against different symbol tables.
class TableMismatch : public Error {
public:
  TableMismatch() : Error("networks do not share a symbol table") {}
};

/// An operation that requires identity-pair labels received a transducer.
class NotAnAutomaton : public Error {
public:
  explicit NotAnAutomaton(const std::string &op)
      : Error(op + ": operand is not an automaton") {}
};

/// Tokenizer, parser and compiler errors. `position` is a character offset
/// for tokenizer errors and a token index for parser errors.
class RegexError : public Error {
public:
  RegexError(const std::string &what, std::size_t position)
      : Error(what + " (at " + std::to_string(position) + ")"),
        position_(position) {}
  explicit RegexError(const std::string &what)
      : Error(what), position_(std::string::npos) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class MergeError : public Error {
public:
  using Error::Error;
};

class CompileReplaceError : public Error {
public:
  using Error::Error;
};

class FormatError : public Error {
public:
  FormatError(const std::string &what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace fsmcalc
