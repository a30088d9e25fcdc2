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

#ifndef MORPHLM_EVAL_HPP_
#define MORPHLM_EVAL_HPP_

#include <cstdint>
#include <map>
#include <string>

#include "morphlm/smoothing.hpp"

namespace morphlm {

struct HitStat {
  std::uint64_t count = 0;
  double percent = 0.0;  // of scored tokens

  friend bool operator==(const HitStat&, const HitStat&) = default;
};

// Aggregated held-out evaluation.  Scored tokens are the test word tokens
// that are in the training vocabulary plus one end-of-sentence event per
// sentence; OOV word tokens are excluded from scoring.  The OOV rate is
// relative to the raw word-token count (no sentence-end events).
struct PerplexityReport {
  std::uint64_t scored_token_count = 0;
  std::uint64_t word_token_count = 0;
  std::uint64_t sentence_count = 0;
  std::uint64_t oov_count = 0;
  double oov_rate = 0.0;  // percent
  double total_log10_prob = 0.0;
  double perplexity = 0.0;
  std::map<int, HitStat> hits_per_order;

  // Derives oov_rate, perplexity and hit percentages from the counts.
  void finalize();

  std::string to_json() const;
  static PerplexityReport from_json(const std::string& text);

  friend bool operator==(const PerplexityReport&,
                         const PerplexityReport&) = default;
};

struct WerReport {
  std::uint64_t reference_length = 0;
  std::uint64_t correct = 0;
  std::uint64_t insertions = 0;
  std::uint64_t deletions = 0;
  std::uint64_t substitutions = 0;
  double wer_percent = 0.0;
  double word_accuracy_percent = 0.0;

  // correct = ref - del - sub; WER = 100 (I+D+S)/ref;
  // accuracy = 100 (ref - I - D - S)/ref.  An empty reference with a
  // non-empty hypothesis uses a denominator of 1.
  static WerReport from_counts(std::uint64_t reference_length,
                               std::uint64_t insertions,
                               std::uint64_t deletions,
                               std::uint64_t substitutions);

  std::string to_json() const;
  static WerReport from_json(const std::string& text);

  friend bool operator==(const WerReport&, const WerReport&) = default;
};

// Aggregates score_sequence over the corpus.  Throws DataError when the test
// corpus has no sentences.
PerplexityReport evaluate_perplexity(const BackoffModel& model,
                                     const Corpus& test);

// Minimum-edit-distance alignment with unit costs.  Ties prefer match, then
// substitution, then deletion, then insertion.
WerReport align_wer(const SentenceTokens& reference,
                    const SentenceTokens& hypothesis);

// Sentence-by-sentence alignment of parallel corpora (1:1 lines).
WerReport corpus_wer(const Corpus& reference, const Corpus& hypothesis);

}  // namespace morphlm

#endif  // MORPHLM_EVAL_HPP_
