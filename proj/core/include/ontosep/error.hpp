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

#include <stdexcept>
#include <string>

namespace ontosep {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constant was referenced that does not occur in the database.
class UnknownConstant : public Error {
 public:
  explicit UnknownConstant(const std::string& name)
      : Error("unknown constant '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Thrown when a configured search or size guard is exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace ontosep
