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

#include "morphlm/counts.hpp"

#include <algorithm>
#include <ostream>

#include "morphlm/error.hpp"

namespace morphlm {

namespace {

NGram to_ngram(std::span<const TokenId> s) { return NGram(s.begin(), s.end()); }

}  // namespace

NGramTable::NGramTable(std::size_t order,
                       std::shared_ptr<const Vocabulary> vocab)
    : order_(order),
      vocab_(std::move(vocab)),
      counts_(order),
      context_totals_(order),
      successor_types_(order),
      continuation_(order),
      count_of_counts_(order) {}

const CountMap& NGramTable::counts(std::size_t k) const {
  if (k < 1 || k > order_)
    throw UsageError("n-gram order " + std::to_string(k) + " out of range");
  return counts_[k - 1];
}

std::uint64_t NGramTable::count(std::span<const TokenId> gram) const {
  const CountMap& m = counts(gram.size());
  auto it = m.find(to_ngram(gram));
  return it == m.end() ? 0 : it->second;
}

std::uint64_t NGramTable::context_total(
    std::span<const TokenId> context) const {
  if (context.size() + 1 > order_)
    throw UsageError("context longer than order-1");
  const CountMap& m = context_totals_[context.size()];
  auto it = m.find(to_ngram(context));
  return it == m.end() ? 0 : it->second;
}

std::uint64_t NGramTable::successor_types(
    std::span<const TokenId> context) const {
  if (context.size() + 1 > order_)
    throw UsageError("context longer than order-1");
  const CountMap& m = successor_types_[context.size()];
  auto it = m.find(to_ngram(context));
  return it == m.end() ? 0 : it->second;
}

std::uint64_t NGramTable::continuation_count(
    std::span<const TokenId> gram) const {
  if (gram.size() < 1 || gram.size() >= order_)
    throw UsageError("continuation counts exist for orders below the maximum");
  const CountMap& m = continuation_[gram.size() - 1];
  auto it = m.find(to_ngram(gram));
  return it == m.end() ? 0 : it->second;
}

const std::map<std::uint64_t, std::uint64_t>& NGramTable::count_of_counts(
    std::size_t k) const {
  if (k < 1 || k > order_)
    throw UsageError("n-gram order " + std::to_string(k) + " out of range");
  return count_of_counts_[k - 1];
}

NGramCounter::NGramCounter(std::size_t order,
                           std::shared_ptr<const Vocabulary> vocab)
    : order_(order), vocab_(std::move(vocab)), counts_(order) {
  if (order_ < 1) throw UsageError("n-gram order must be at least 1");
}

void NGramCounter::add_sentence(const SentenceTokens& sentence) {
  std::vector<TokenId> padded;
  padded.reserve(sentence.size() + 2);
  padded.push_back(Vocabulary::kSentenceBeginId);
  for (const std::string& token : sentence)
    padded.push_back(vocab_->id_or_unknown(token));
  padded.push_back(Vocabulary::kSentenceEndId);

  for (std::size_t k = 1; k <= order_; ++k) {
    if (padded.size() < k) continue;
    CountMap& m = counts_[k - 1];
    for (std::size_t i = 0; i + k <= padded.size(); ++i)
      ++m[NGram(padded.begin() + i, padded.begin() + i + k)];
  }
}

void NGramCounter::merge(const NGramCounter& other) {
  if (other.order_ != order_)
    throw UsageError("cannot merge counters of different orders");
  for (std::size_t k = 0; k < order_; ++k)
    for (const auto& [gram, c] : other.counts_[k]) counts_[k][gram] += c;
}

NGramTable NGramCounter::finish() const {
  NGramTable table(order_, vocab_);
  table.counts_ = counts_;
  for (std::size_t k = 1; k <= order_; ++k) {
    auto& totals = table.context_totals_[k - 1];
    auto& types = table.successor_types_[k - 1];
    auto& cofc = table.count_of_counts_[k - 1];
    for (const auto& [gram, c] : counts_[k - 1]) {
      NGram context(gram.begin(), gram.end() - 1);
      totals[context] += c;
      types[context] += 1;
      ++cofc[c];
      if (k >= 2) {
        // Each distinct k-gram contributes one left-extension to its suffix.
        NGram suffix(gram.begin() + 1, gram.end());
        ++table.continuation_[k - 2][suffix];
      }
    }
  }
  return table;
}

NGramTable count_ngrams(const Corpus& corpus, std::size_t order,
                        std::shared_ptr<const Vocabulary> vocab) {
  NGramCounter counter(order, std::move(vocab));
  for (const SentenceTokens& sentence : corpus) counter.add_sentence(sentence);
  return counter.finish();
}

void dump_counts(const NGramTable& table, std::ostream& out) {
  for (std::size_t k = 1; k <= table.order(); ++k) {
    std::vector<const NGram*> grams;
    grams.reserve(table.counts(k).size());
    for (const auto& [gram, c] : table.counts(k)) grams.push_back(&gram);
    std::sort(grams.begin(), grams.end(),
              [](const NGram* a, const NGram* b) { return *a < *b; });
    for (const NGram* gram : grams) {
      for (std::size_t i = 0; i < gram->size(); ++i) {
        if (i) out << ' ';
        out << table.vocab().token((*gram)[i]);
      }
      out << '\t' << table.count(*gram) << '\n';
    }
  }
}

}  // namespace morphlm
