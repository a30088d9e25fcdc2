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

#ifndef MORPHLM_COUNTS_HPP_
#define MORPHLM_COUNTS_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "morphlm/corpus.hpp"

namespace morphlm {

using NGram = std::vector<TokenId>;

struct NGramHash {
  std::size_t operator()(const NGram& g) const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (TokenId t : g) {
      for (int shift = 0; shift < 32; shift += 8) {
        h ^= (t >> shift) & 0xFF;
        h *= 1099511628211ull;
      }
    }
    return static_cast<std::size_t>(h);
  }
};

using CountMap = std::unordered_map<NGram, std::uint64_t, NGramHash>;

// Every statistic a smoothing method consumes, for orders 1..order:
// raw counts, per-context totals, count-of-counts, distinct-successor
// counts, and continuation (distinct left-extension) counts.
class NGramTable {
 public:
  NGramTable(std::size_t order, std::shared_ptr<const Vocabulary> vocab);

  std::size_t order() const { return order_; }
  const Vocabulary& vocab() const { return *vocab_; }
  std::shared_ptr<const Vocabulary> vocab_ptr() const { return vocab_; }

  // k-gram -> count, for k in [1, order].
  const CountMap& counts(std::size_t k) const;
  std::uint64_t count(std::span<const TokenId> gram) const;

  // Sum of counts of all extensions of a context of length k-1 (the empty
  // context gives the order-1 total, including sentence-begin tokens).
  std::uint64_t context_total(std::span<const TokenId> context) const;

  // Number of distinct continuations T(h) observed after a context.
  std::uint64_t successor_types(std::span<const TokenId> context) const;

  // Number of distinct left-extensions of a k-gram, k < order.
  std::uint64_t continuation_count(std::span<const TokenId> gram) const;

  // r -> n_r for order k; r = 0 is never present.
  const std::map<std::uint64_t, std::uint64_t>& count_of_counts(
      std::size_t k) const;

 private:
  friend class NGramCounter;

  std::size_t order_;
  std::shared_ptr<const Vocabulary> vocab_;
  std::vector<CountMap> counts_;             // [k-1] -> k-gram counts
  std::vector<CountMap> context_totals_;     // [k-1] -> (k-1)-context totals
  std::vector<CountMap> successor_types_;    // [k-1] -> (k-1)-context T(h)
  std::vector<CountMap> continuation_;       // [k-1] -> k-gram left-extensions
  std::vector<std::map<std::uint64_t, std::uint64_t>> count_of_counts_;
};

// Shard-friendly accumulator: counting is per-sentence, merge is an
// elementwise sum, and finish() derives the dependent statistics.
class NGramCounter {
 public:
  NGramCounter(std::size_t order, std::shared_ptr<const Vocabulary> vocab);

  void add_sentence(const SentenceTokens& sentence);
  void merge(const NGramCounter& other);
  NGramTable finish() const;

 private:
  std::size_t order_;
  std::shared_ptr<const Vocabulary> vocab_;
  std::vector<CountMap> counts_;
};

// Pads each sentence with one sentence-begin and one sentence-end symbol and
// counts all k-grams for k in [1, order].  Tokens outside the vocabulary map
// to the unknown symbol.  Throws UsageError for order < 1.
NGramTable count_ngrams(const Corpus& corpus, std::size_t order,
                        std::shared_ptr<const Vocabulary> vocab);

// Text dump "token1 ... tokenK<TAB>count", orders ascending, entries sorted
// by token id tuples.
void dump_counts(const NGramTable& table, std::ostream& out);

}  // namespace morphlm

#endif  // MORPHLM_COUNTS_HPP_
