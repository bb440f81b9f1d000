// Copyright 2026 The stsp Authors.
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

#ifndef STSP_ERRORS_H_
#define STSP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace stsp {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs that do not have the shape an operation requires: dimension
// mismatches, tours that are not permutations, packings that are not
// partitions, edge sets that are not chain collections.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A well-formed input outside the supported scope (k != 2 for the
// heuristic, asymmetric matrices for matching).
class UnsupportedParameterError : public Error {
 public:
  using Error::Error;
};

// Enumeration would exceed the configured size cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// Malformed instance or solution text. line() is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// An invariant the algorithm guarantees was found broken.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace stsp

#endif  // STSP_ERRORS_H_
