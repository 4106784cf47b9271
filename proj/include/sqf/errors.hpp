// Copyright 2026 The SQF Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <stdexcept>
#include <string>

namespace sqf {

/// Base for every error the toolkit raises. `kind()` is a stable tag used in
/// machine-readable CLI error output.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Structurally invalid input (bad spin value, unknown label, NaN, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "validation"; }
};

/// Assignment label set does not match the model's label set.
class AssignmentMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
  const char* kind() const noexcept override { return "assignment_mismatch"; }
};

/// Exhaustive or dense operation requested above its size guard.
class SizeLimitError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "size_limit"; }
};

/// Conditional statistic requested over an empty subset of shots.
class EmptyConditionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "empty_condition"; }
};

/// Malformed input file; message carries line/column context.
class ParseError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "parse"; }
};

class IoError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "io"; }
};

}  // namespace sqf
