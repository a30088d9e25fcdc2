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

#ifndef MORPHLM_STEM_RULES_HPP_
#define MORPHLM_STEM_RULES_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "morphlm/corpus.hpp"

namespace morphlm {

struct SuffixRule {
  std::string suffix;                // non-empty, NFC
  std::string stem_final_constraint; // empty = unconstrained

  friend bool operator==(const SuffixRule&, const SuffixRule&) = default;
};

// Rule-based splitter configuration: a word whose proper suffix matches a
// rule is rewritten as [stem, marker+suffix].
class SuffixRuleSet {
 public:
  SuffixRuleSet() = default;
  SuffixRuleSet(std::vector<SuffixRule> rules, std::size_t min_stem_length,
                std::string marker);

  const std::vector<SuffixRule>& rules() const { return rules_; }
  std::size_t min_stem_length() const { return min_stem_length_; }
  const std::string& marker() const { return marker_; }

 private:
  std::vector<SuffixRule> rules_;        // deduplicated on (suffix, constraint)
  std::size_t min_stem_length_ = 3;      // code points
  std::string marker_ = "+";             // single code point
};

// Rule file: UTF-8, one rule per line, "SUFFIX[<TAB>STEM_FINAL_CONSTRAINT]".
SuffixRuleSet load_rules(std::istream& in, std::size_t min_stem_length = 3,
                         const std::string& marker = "+");
SuffixRuleSet load_rules_file(const std::string& path,
                              std::size_t min_stem_length = 3,
                              const std::string& marker = "+");

// Longest matching suffix wins; length ties prefer the constrained rule.
// Returns [word] unchanged when no rule applies.
SentenceTokens split_word_supervised(const std::string& word,
                                     const SuffixRuleSet& rules);

struct SupervisedSplitReport {
  std::uint64_t split_word_types = 0;   // distinct word types that were split
  std::uint64_t split_token_count = 0;  // token occurrences that were split
};

Corpus split_corpus_supervised(const Corpus& corpus, const SuffixRuleSet& rules,
                               SupervisedSplitReport* report = nullptr);

}  // namespace morphlm

#endif  // MORPHLM_STEM_RULES_HPP_
