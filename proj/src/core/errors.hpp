#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace implic {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed formula or proof text. `position` is a 0-based byte offset
/// into the offending text for formulas, and a 1-based line number for
/// proof files (the message says which).
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position(position) {}
  std::size_t position;
};

/// A builder or transformation was fed input outside its contract.
struct PreconditionError : Error {
  using Error::Error;
};

/// Truth-table enumeration refused: too many distinct variables.
struct EnumerationCapError : Error {
  using Error::Error;
};

}  // namespace implic
