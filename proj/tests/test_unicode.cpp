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

#include <doctest.h>

#include <random>
#include <string>

#include "morphlm/error.hpp"
#include "morphlm/normalize.hpp"
#include "morphlm/utf8.hpp"

using namespace morphlm;

namespace {

struct NfcCase {
  const char* input;
  const char* expected;
};

// Frozen against a reference Unicode normalizer (python3 unicodedata,
// UCD 13.0): composition, Hangul, singletons, exclusions, mark reordering.
const NfcCase kNfcCases[] = {
    {"á", "á"},
    {"ై", "ై"},  // Telugu vowel sign AI from E + length mark
    {"क़", "क़"},  // qa stays decomposed (exclusion)
    {"각", "각"},
    {"가", "가"},
    {"각", "각"},
    {"Ω", "Ω"},  // ohm sign singleton
    {"q̣̇", "q̣̇"},
    {"q̣̇", "q̣̇"},
    {"ΰ", "ΰ"},
    {"é", "é"},
    {"é", "é"},
    {"ํ่", "ํ่"},
    {"ạ́", "ạ́"},
    {"ạ́", "ạ́"},
    {"ą́", "ą́"},
    {"ṩ", "ṩ"},
    {"ḍ̇", "ḍ̇"},
    {"చదువుచున్నాడ"
     "ు",
     "చదువుచున్నాడ"
     "ు"},
    {"हिन्दी",
     "हिन्दी"},
    {"Å", "Å"},
    {"Å", "Å"},
    {"Å", "Å"},
    {"ﬁ", "ﬁ"},  // compatibility ligature untouched by NFC
    {"ཷ", "ཷ"},  // non-starter decomposition never recomposes
    {"ढ़़", "ढ़़"},
    {"ascii only", "ascii only"},
    {"", ""},
};

}  // namespace

TEST_CASE("utf8 round trip and length") {
  const std::string telugu = "చదువు";
  CHECK(utf8::length(telugu) == 5);
  CHECK(utf8::encode(utf8::decode(telugu)) == telugu);
  CHECK(utf8::substr(telugu, 0, 2) == "చద");
  CHECK(utf8::substr(telugu, 3, 99) == "వు");
  CHECK(utf8::ends_with(telugu, "ు"));
  CHECK(!utf8::ends_with(telugu, "ద"));
}

TEST_CASE("utf8 rejects malformed input") {
  CHECK_THROWS_AS(utf8::decode("\xC0\xAF"), DataError);          // overlong
  CHECK_THROWS_AS(utf8::decode("\xED\xA0\x80"), DataError);      // surrogate
  CHECK_THROWS_AS(utf8::decode("\xF4\x90\x80\x80"), DataError);  // > U+10FFFF
  CHECK_THROWS_AS(utf8::decode("\xE0\x80"), DataError);          // truncated
  CHECK_THROWS_AS(utf8::decode("\x80"), DataError);              // stray tail
}

TEST_CASE("nfc matches the reference normalizer") {
  for (const NfcCase& c : kNfcCases) {
    CAPTURE(c.input);
    CHECK(to_nfc(std::string(c.input)) == c.expected);
  }
}

TEST_CASE("nfc is idempotent on the fixed cases") {
  for (const NfcCase& c : kNfcCases) {
    const std::string once = to_nfc(std::string(c.input));
    CHECK(to_nfc(once) == once);
  }
}

TEST_CASE("nfc is idempotent on random mark soup") {
  std::mt19937 rng(20260810);
  const char32_t pool[] = {'a',    'b',    0x0301, 0x0323, 0x0307, 0x0C41,
                           0x0C48, 0x1100, 0x1161, 0x11A8, 0x0915, 0x093C};
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<char32_t> cps;
    const int len = static_cast<int>(rng() % 8);
    for (int i = 0; i < len; ++i) cps.push_back(pool[rng() % std::size(pool)]);
    const std::string s = utf8::encode(cps);
    const std::string once = to_nfc(s);
    CAPTURE(s);
    CHECK(to_nfc(once) == once);
  }
}
