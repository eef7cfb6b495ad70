// Copyright 2026 The hamlab Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace hamlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition (unknown ids, wrong degrees...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Input file could not be parsed; carries the 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A size bound (canonical labeling, enumeration budget, bitset width) was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class NotLineGraph : public Error {
 public:
  using Error::Error;
};

/// The core reduction ran into a vertex carrying only a loop (a collapsed cycle).
class DegenerateCore : public Error {
 public:
  using Error::Error;
};

/// A structural claim that should hold under the stated hypotheses failed.
class StructuralViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace hamlab
