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

#include "ontosep/symbol.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace ontosep {
namespace {

struct SymbolTable {
  std::shared_mutex mutex;
  std::deque<std::string> names;  // stable addresses
  std::unordered_map<std::string_view, std::uint32_t> ids;
};

SymbolTable& table() {
  static SymbolTable t;
  return t;
}

}  // namespace

std::uint32_t Symbol::intern(std::string_view text) {
  SymbolTable& t = table();
  {
    std::shared_lock lock(t.mutex);
    if (auto it = t.ids.find(text); it != t.ids.end()) return it->second;
  }
  std::unique_lock lock(t.mutex);
  if (auto it = t.ids.find(text); it != t.ids.end()) return it->second;
  auto id = static_cast<std::uint32_t>(t.names.size());
  t.names.emplace_back(text);
  t.ids.emplace(std::string_view(t.names.back()), id);
  return id;
}

const std::string& Symbol::str() const {
  static const std::string kEmpty;
  if (id_ == kInvalid) return kEmpty;
  SymbolTable& t = table();
  std::shared_lock lock(t.mutex);
  return t.names[id_];
}

}  // namespace ontosep
