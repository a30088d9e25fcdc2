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

#include "morphlm/stem_rules.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <unordered_set>

#include "morphlm/error.hpp"
#include "morphlm/normalize.hpp"
#include "morphlm/utf8.hpp"

namespace morphlm {

SuffixRuleSet::SuffixRuleSet(std::vector<SuffixRule> rules,
                             std::size_t min_stem_length, std::string marker)
    : rules_(std::move(rules)),
      min_stem_length_(min_stem_length),
      marker_(std::move(marker)) {
  if (min_stem_length_ < 1)
    throw UsageError("minimum stem length must be at least 1");
  if (utf8::length(marker_) != 1)
    throw UsageError("marker must be exactly one code point");
  // Deduplicate on (suffix, constraint) while keeping a stable order.
  std::vector<SuffixRule> unique;
  for (SuffixRule& rule : rules_) {
    if (rule.suffix.empty()) throw DataError("empty suffix in rule set");
    if (std::find(unique.begin(), unique.end(), rule) == unique.end())
      unique.push_back(std::move(rule));
  }
  rules_ = std::move(unique);
}

SuffixRuleSet load_rules(std::istream& in, std::size_t min_stem_length,
                         const std::string& marker) {
  std::vector<SuffixRule> rules;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    SuffixRule rule;
    try {
      if (tab == std::string::npos) {
        rule.suffix = to_nfc(line);
      } else {
        rule.suffix = to_nfc(line.substr(0, tab));
        rule.stem_final_constraint = to_nfc(line.substr(tab + 1));
        if (rule.stem_final_constraint.find('\t') != std::string::npos)
          throw DataError("more than two fields");
      }
    } catch (const DataError& e) {
      throw DataError("rule file line " + std::to_string(line_no) + ": " +
                      e.what());
    }
    if (rule.suffix.empty())
      throw DataError("rule file line " + std::to_string(line_no) +
                      ": empty suffix");
    rules.push_back(std::move(rule));
  }
  if (rules.empty()) throw DataError("rule file contains no rules");
  return SuffixRuleSet(std::move(rules), min_stem_length, marker);
}

SuffixRuleSet load_rules_file(const std::string& path,
                              std::size_t min_stem_length,
                              const std::string& marker) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open rule file: " + path);
  try {
    return load_rules(in, min_stem_length, marker);
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

SentenceTokens split_word_supervised(const std::string& word,
                                     const SuffixRuleSet& rules) {
  const SuffixRule* best = nullptr;
  std::size_t best_len = 0;
  for (const SuffixRule& rule : rules.rules()) {
    if (rule.suffix.size() >= word.size()) continue;  // proper suffix only
    if (!utf8::ends_with(word, rule.suffix)) continue;
    const std::string stem = word.substr(0, word.size() - rule.suffix.size());
    if (utf8::length(stem) < rules.min_stem_length()) continue;
    if (!rule.stem_final_constraint.empty() &&
        !utf8::ends_with(stem, rule.stem_final_constraint))
      continue;
    const std::size_t len = utf8::length(rule.suffix);
    const bool better =
        !best || len > best_len ||
        (len == best_len && best->stem_final_constraint.empty() &&
         !rule.stem_final_constraint.empty());
    if (better) {
      best = &rule;
      best_len = len;
    }
  }
  if (!best) return {word};
  return {word.substr(0, word.size() - best->suffix.size()),
          rules.marker() + best->suffix};
}

Corpus split_corpus_supervised(const Corpus& corpus, const SuffixRuleSet& rules,
                               SupervisedSplitReport* report) {
  Corpus out;
  out.reserve(corpus.size());
  std::unordered_set<std::string> split_types;
  std::uint64_t split_tokens = 0;
  for (const SentenceTokens& sentence : corpus) {
    SentenceTokens rewritten;
    rewritten.reserve(sentence.size());
    for (const std::string& word : sentence) {
      if (word.find(rules.marker()) != std::string::npos)
        throw DataError("corpus token '" + word +
                        "' contains the marker character");
      SentenceTokens parts = split_word_supervised(word, rules);
      if (parts.size() == 2) {
        ++split_tokens;
        split_types.insert(word);
      }
      for (std::string& part : parts) rewritten.push_back(std::move(part));
    }
    out.push_back(std::move(rewritten));
  }
  if (report) {
    report->split_word_types = split_types.size();
    report->split_token_count = split_tokens;
  }
  return out;
}

}  // namespace morphlm
