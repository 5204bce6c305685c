// Copyright 2026 The HPDA Authors
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

namespace hpda {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Constructor or operation parameters outside their documented range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Grids whose shape disagrees with the declared dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// An input array that parses but fails PDA/HPDA verification.
class InvalidArtifactError : public Error {
 public:
  using Error::Error;
};

// A user could not recover a packet from its cache and mirror signals.
class DecodeError : public Error {
 public:
  using Error::Error;
};

}  // namespace hpda
