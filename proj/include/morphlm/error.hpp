// Copyright 2026 The morphlm Authors.
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

#ifndef MORPHLM_ERROR_HPP_
#define MORPHLM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace morphlm {

// Caller passed arguments that violate an interface contract (CLI exit 1).
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input data is semantically unusable: empty corpus, bad encoding, malformed
// rule file (CLI exit 2).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// A structured file (ARPA model, config) failed to parse (CLI exit 2).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem or stream failure (CLI exit 2).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace morphlm

#endif  // MORPHLM_ERROR_HPP_
