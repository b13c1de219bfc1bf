// Copyright 2026 The CLDP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace cldp {

// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid mechanism configuration (odd user count, window not divisible by
// the tossing space in shuffle mode, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// User/partition index outside [1, num_users].
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// Two sequences that must be equally long are not.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

// Aggregation inputs with inconsistent shapes.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

// Number of perturbed series does not match the configured user count.
class UserCountMismatch : public Error {
 public:
  using Error::Error;
};

// Numeric argument outside its valid domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class FileNotFound : public Error {
 public:
  using Error::Error;
};

class MissingColumn : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

// Failure writing an output file.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input row; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, long line)
      : Error(message + " (line " + std::to_string(line) + ")"), line_(line) {}

  long line() const { return line_; }

 private:
  long line_;
};

}  // namespace cldp
