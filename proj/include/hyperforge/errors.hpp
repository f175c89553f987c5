// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace hyperforge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured size or search bound would be exceeded.
class BoundError : public Error {
 public:
  using Error::Error;
};

/// An element index lies outside the carrier.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A computation reached a state that contradicts a proven statement.
/// Raised loudly instead of being reported as an ordinary negative result.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed structure or geometry document.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hyperforge
