/*
 * Copyright 2026 The ontosep Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace ontosep {

// Interned identifier used for concept names, role names, constants and
// query variables. Equality is by id; ordering is lexicographic on the text
// so that ordered containers iterate by name.
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::string_view text) : id_(intern(text)) {}

  static Symbol from_id(std::uint32_t id) {
    Symbol s;
    s.id_ = id;
    return s;
  }

  std::uint32_t id() const { return id_; }
  const std::string& str() const;
  bool valid() const { return id_ != kInvalid; }

  friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b) {
    if (a.id_ == b.id_) return std::strong_ordering::equal;
    return a.str() <=> b.str();
  }

 private:
  static constexpr std::uint32_t kInvalid = 0xffffffffu;
  static std::uint32_t intern(std::string_view text);

  std::uint32_t id_ = kInvalid;
};

inline std::ostream& operator<<(std::ostream& os, Symbol s) { return os << s.str(); }

}  // namespace ontosep

template <>
struct std::hash<ontosep::Symbol> {
  std::size_t operator()(ontosep::Symbol s) const noexcept { return std::hash<std::uint32_t>{}(s.id()); }
};
