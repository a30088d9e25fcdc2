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

#ifndef MORPHLM_NORMALIZE_HPP_
#define MORPHLM_NORMALIZE_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace morphlm {

// Canonical composition (NFC): full canonical decomposition, canonical
// reordering of combining marks, then canonical recomposition including
// algorithmic Hangul.  Tables are generated from the Unicode character
// database (see scripts/gen_unicode_tables.py).
std::string to_nfc(std::string_view text);

// Code point level variant used by the tokenizer.
std::vector<char32_t> to_nfc(const std::vector<char32_t>& cps);

}  // namespace morphlm

#endif  // MORPHLM_NORMALIZE_HPP_
