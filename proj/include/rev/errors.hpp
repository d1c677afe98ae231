#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rev {

// Base class of everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Formula text rejected by the lexer/parser. `position` is a 0-based byte
// offset into the input; `expected` describes what would have been legal.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t position,
             std::string expected = {})
      : Error(msg), position(position), expected(std::move(expected)) {}
  std::size_t position;
  std::string expected;
};

// An atom that does not belong to the ambient signature.
struct UnknownAtomError : ParseError {
  UnknownAtomError(const std::string& atom, std::size_t position)
      : ParseError("unknown atom '" + atom + "'", position), atom(atom) {}
  std::string atom;
};

// A user atom colliding with the reserved fresh-atom prefix.
struct ReservedAtomError : ParseError {
  ReservedAtomError(const std::string& atom, std::size_t position)
      : ParseError("atom '" + atom + "' uses the reserved prefix", position),
        atom(atom) {}
  std::string atom;
};

// Ill-formed signatures, non-bijective renamings, models outside the
// signature's universe.
struct SignatureError : Error {
  using Error::Error;
};

// An operation whose domain excludes empty model sets was handed one.
struct EmptyOperandError : Error {
  using Error::Error;
};

// Argument outside an operation's stated domain (e.g. surprise on w not in mu).
struct DomainError : Error {
  using Error::Error;
};

// One of the hard resource caps was exceeded (signature width, enumeration
// size, sweep bounds, time budget).
struct LimitError : Error {
  using Error::Error;
};

}  // namespace rev
