// Copyright 2026 The Evorest Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EVOREST_ERROR_H_
#define EVOREST_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evorest {

// Base of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed JSON input. `offset` is the byte offset reported by the parser.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, size_t offset)
      : Error(what), offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

// Well-formed JSON that is not a usable API schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// A schema construct the genotype builder cannot represent.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A caller broke a documented precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

// The driver answered with something the control protocol does not allow.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// Nobody is listening at the driver URL.
class DriverUnreachableError : public Error {
 public:
  using Error::Error;
};

class ResolutionError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace evorest

#endif  // EVOREST_ERROR_H_
