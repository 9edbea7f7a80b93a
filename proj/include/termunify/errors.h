// Copyright 2026 The termunify Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TERMUNIFY_ERRORS_H_
#define TERMUNIFY_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace termunify {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A position does not address a subterm. `prefix` is the rendering of the
// longest prefix that is still valid followed by the first offending index.
class InvalidPositionError : public Error {
 public:
  InvalidPositionError(const std::string& position, const std::string& prefix)
      : Error("invalid position " + position + ": no subterm at " + prefix),
        position_(position),
        prefix_(prefix) {}

  const std::string& position() const { return position_; }
  const std::string& offending_prefix() const { return prefix_; }

 private:
  std::string position_;
  std::string prefix_;
};

class UnknownSymbolError : public Error {
 public:
  explicit UnknownSymbolError(const std::string& symbol)
      : Error("unknown symbol '" + symbol + "'"), symbol_(symbol) {}

  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

class ArityMismatchError : public Error {
 public:
  ArityMismatchError(const std::string& symbol, std::size_t expected,
                     std::size_t found)
      : Error("arity mismatch for '" + symbol + "': expected " +
              std::to_string(expected) + " argument(s), found " +
              std::to_string(found)),
        symbol_(symbol),
        expected_(expected),
        found_(found) {}

  const std::string& symbol() const { return symbol_; }
  std::size_t expected() const { return expected_; }
  std::size_t found() const { return found_; }

 private:
  std::string symbol_;
  std::size_t expected_;
  std::size_t found_;
};

class DuplicateSymbolError : public Error {
 public:
  explicit DuplicateSymbolError(const std::string& symbol)
      : Error("duplicate symbol '" + symbol + "'"), symbol_(symbol) {}

  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

// Malformed names, identity bindings and similar construction errors.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented domain, e.g. asking for the
// resolving difference of two terms that cannot be unified.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Textual input could not be parsed. `location` is a 0-based character
// offset for terms and a 1-based line number for signature files.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t location)
      : Error(message), location_(location) {}

  std::size_t location() const { return location_; }

 private:
  std::size_t location_;
};

}  // namespace termunify

#endif  // TERMUNIFY_ERRORS_H_
