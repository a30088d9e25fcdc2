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

#ifndef MORPHLM_UTF8_HPP_
#define MORPHLM_UTF8_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace morphlm {
namespace utf8 {

// Strict decoder: rejects overlong forms, surrogates, values above U+10FFFF
// and truncated sequences.  Throws DataError on invalid input.
std::vector<char32_t> decode(std::string_view text);

std::string encode(const std::vector<char32_t>& cps);
void append(std::string& out, char32_t cp);

// Number of code points in a valid UTF-8 string.
std::size_t length(std::string_view text);

// Substring by code point index [begin, end).  Indices are clamped to the
// string's code point length.
std::string substr(std::string_view text, std::size_t begin, std::size_t end);

// True when `suffix` is a trailing substring of `text` (byte comparison is
// sound for UTF-8).
bool ends_with(std::string_view text, std::string_view suffix);

}  // namespace utf8
}  // namespace morphlm

#endif  // MORPHLM_UTF8_HPP_
