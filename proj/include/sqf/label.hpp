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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <variant>

namespace sqf {

/// Opaque variable identifier: an integer or a string.
///
/// Integers order before strings; integers compare numerically, strings
/// lexicographically.
class Label {
 public:
  Label() = default;
  Label(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Label(int value) : value_(std::int64_t{value}) {}  // NOLINT(google-explicit-constructor)
  Label(std::string value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Label(const char* value) : value_(std::string(value)) {}  // NOLINT(google-explicit-constructor)

  bool is_integer() const { return std::holds_alternative<std::int64_t>(value_); }
  std::int64_t as_integer() const { return std::get<std::int64_t>(value_); }
  const std::string& as_string() const { return std::get<std::string>(value_); }

  /// Textual form; integers print in decimal.
  std::string str() const;

  friend bool operator==(const Label&, const Label&) = default;
  friend std::strong_ordering operator<=>(const Label& a, const Label& b);

 private:
  std::variant<std::int64_t, std::string> value_{std::int64_t{0}};
};

std::ostream& operator<<(std::ostream& os, const Label& label);

struct LabelHash {
  std::size_t operator()(const Label& label) const;
};

}  // namespace sqf
