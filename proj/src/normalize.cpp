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

#include "morphlm/normalize.hpp"

#include <algorithm>
#include <cstdint>

#include "morphlm/utf8.hpp"

namespace morphlm {

namespace {

#include "unicode_tables.inc"

// Hangul syllable composition constants (UAX #15 section 3.12).
constexpr char32_t kHangulSBase = 0xAC00;
constexpr char32_t kHangulLBase = 0x1100;
constexpr char32_t kHangulVBase = 0x1161;
constexpr char32_t kHangulTBase = 0x11A7;
constexpr int kHangulLCount = 19;
constexpr int kHangulVCount = 21;
constexpr int kHangulTCount = 28;
constexpr int kHangulNCount = kHangulVCount * kHangulTCount;
constexpr int kHangulSCount = kHangulLCount * kHangulNCount;

int combining_class(char32_t cp) {
  auto it = std::lower_bound(
      std::begin(kCombiningClass), std::end(kCombiningClass), cp,
      [](const CccEntry& e, char32_t v) { return e.cp < v; });
  if (it != std::end(kCombiningClass) && it->cp == cp) return it->ccc;
  return 0;
}

const DecompEntry* find_decomp(char32_t cp) {
  auto it = std::lower_bound(
      std::begin(kCanonicalDecomp), std::end(kCanonicalDecomp), cp,
      [](const DecompEntry& e, char32_t v) { return e.cp < v; });
  if (it != std::end(kCanonicalDecomp) && it->cp == cp) return &*it;
  return nullptr;
}

char32_t compose_pair(char32_t a, char32_t b) {
  // Algorithmic Hangul: L+V and LV+T.
  if (a >= kHangulLBase && a < kHangulLBase + kHangulLCount &&
      b >= kHangulVBase && b < kHangulVBase + kHangulVCount) {
    return kHangulSBase + ((a - kHangulLBase) * kHangulVCount +
                           (b - kHangulVBase)) * kHangulTCount;
  }
  if (a >= kHangulSBase && a < kHangulSBase + kHangulSCount &&
      (a - kHangulSBase) % kHangulTCount == 0 && b > kHangulTBase &&
      b < kHangulTBase + kHangulTCount) {
    return a + (b - kHangulTBase);
  }
  const uint64_t key = (static_cast<uint64_t>(a) << 32) | b;
  auto it = std::lower_bound(
      std::begin(kCompositionPairs), std::end(kCompositionPairs), key,
      [](const CompEntry& e, uint64_t v) { return e.key < v; });
  if (it != std::end(kCompositionPairs) && it->key == key) return it->composed;
  return 0;
}

void decompose(char32_t cp, std::vector<char32_t>& out) {
  if (cp >= kHangulSBase && cp < kHangulSBase + kHangulSCount) {
    const int index = cp - kHangulSBase;
    out.push_back(kHangulLBase + index / kHangulNCount);
    out.push_back(kHangulVBase + (index % kHangulNCount) / kHangulTCount);
    const int t = index % kHangulTCount;
    if (t != 0) out.push_back(kHangulTBase + t);
    return;
  }
  if (const DecompEntry* e = find_decomp(cp)) {
    for (uint8_t i = 0; i < e->length; ++i)
      out.push_back(kDecompBuffer[e->offset + i]);
    return;
  }
  out.push_back(cp);
}

// Canonical ordering: stable bubble pass over nonzero combining classes.
void canonical_order(std::vector<char32_t>& cps) {
  for (std::size_t i = 1; i < cps.size(); ++i) {
    const int ccc = combining_class(cps[i]);
    if (ccc == 0) continue;
    std::size_t j = i;
    while (j > 0) {
      const int prev = combining_class(cps[j - 1]);
      if (prev == 0 || prev <= ccc) break;
      std::swap(cps[j - 1], cps[j]);
      --j;
    }
  }
}

void compose(std::vector<char32_t>& cps) {
  if (cps.empty()) return;
  std::vector<char32_t> out;
  out.reserve(cps.size());
  // Index into `out` of the last starter, or npos.
  std::size_t last_starter = std::string::npos;
  int prev_ccc = -1;  // ccc of the last char appended after the starter
  for (char32_t cp : cps) {
    const int ccc = combining_class(cp);
    // Composable when cp directly follows the last starter, or when every
    // character in between has a strictly lower combining class (unblocked).
    if (last_starter != std::string::npos &&
        (out.size() == last_starter + 1 || prev_ccc < ccc)) {
      if (char32_t composed = compose_pair(out[last_starter], cp)) {
        out[last_starter] = composed;
        continue;  // prev_ccc unchanged: cp was absorbed
      }
    }
    out.push_back(cp);
    if (ccc == 0) {
      last_starter = out.size() - 1;
      prev_ccc = -1;
    } else {
      prev_ccc = ccc;
    }
  }
  cps = std::move(out);
}

bool is_ascii_or_stable(const std::vector<char32_t>& cps) {
  // Nothing below U+0300 decomposes or combines.
  for (char32_t cp : cps)
    if (cp >= 0x300) return false;
  return true;
}

}  // namespace

std::vector<char32_t> to_nfc(const std::vector<char32_t>& cps) {
  if (is_ascii_or_stable(cps)) return cps;
  std::vector<char32_t> decomposed;
  decomposed.reserve(cps.size() + 8);
  for (char32_t cp : cps) decompose(cp, decomposed);
  canonical_order(decomposed);
  compose(decomposed);
  return decomposed;
}

std::string to_nfc(std::string_view text) {
  return utf8::encode(to_nfc(utf8::decode(text)));
}

}  // namespace morphlm
