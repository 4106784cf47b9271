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


#include "sqf/label.hpp"

namespace sqf {

std::string Label::str() const {
  if (is_integer()) return std::to_string(as_integer());
  return as_string();
}

std::strong_ordering operator<=>(const Label& a, const Label& b) {
  if (a.is_integer() != b.is_integer()) {
    return a.is_integer() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.is_integer()) return a.as_integer() <=> b.as_integer();
  return a.as_string().compare(b.as_string()) <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Label& label) { return os << label.str(); }

std::size_t LabelHash::operator()(const Label& label) const {
  if (label.is_integer()) return std::hash<std::int64_t>{}(label.as_integer());
  return std::hash<std::string>{}(label.as_string()) ^ 0x9e3779b97f4a7c15ULL;
}

}  // namespace sqf
