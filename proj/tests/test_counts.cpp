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
#include <sstream>

#include "morphlm/counts.hpp"
#include "morphlm/error.hpp"

using namespace morphlm;

namespace {

std::shared_ptr<Vocabulary> vocab_of(const Corpus& corpus) {
  auto [vocab, stats] = build_vocabulary(corpus);
  return std::make_shared<Vocabulary>(std::move(vocab));
}

Corpus random_corpus(std::mt19937& rng, int sentences, int vocab_size) {
  Corpus corpus;
  for (int i = 0; i < sentences; ++i) {
    SentenceTokens s;
    const int len = 1 + static_cast<int>(rng() % 6);
    for (int j = 0; j < len; ++j)
      s.push_back(std::string(1, static_cast<char>('a' + rng() % vocab_size)));
    corpus.push_back(s);
  }
  return corpus;
}

}  // namespace

TEST_CASE("bigram counts enumerate by hand") {
  const Corpus corpus = {{"a", "b"}};
  auto vocab = vocab_of(corpus);
  const NGramTable table = count_ngrams(corpus, 2, vocab);
  const TokenId a = *vocab->find("a");
  const TokenId b = *vocab->find("b");
  const TokenId bos = Vocabulary::kSentenceBeginId;
  const TokenId eos = Vocabulary::kSentenceEndId;
  CHECK(table.count(NGram{bos, a}) == 1);
  CHECK(table.count(NGram{a, b}) == 1);
  CHECK(table.count(NGram{b, eos}) == 1);
  CHECK(table.counts(2).size() == 3);
}

TEST_CASE("unigram counts include padding symbols") {
  const Corpus corpus = {{"a"}};
  auto vocab = vocab_of(corpus);
  const NGramTable table = count_ngrams(corpus, 1, vocab);
  CHECK(table.count(NGram{Vocabulary::kSentenceBeginId}) == 1);
  CHECK(table.count(NGram{*vocab->find("a")}) == 1);
  CHECK(table.count(NGram{Vocabulary::kSentenceEndId}) == 1);
  CHECK(table.counts(1).size() == 3);
}

TEST_CASE("repeated bigram lands in count-of-counts") {
  const Corpus corpus = {{"a", "b"}, {"a", "b"}};
  auto vocab = vocab_of(corpus);
  const NGramTable table = count_ngrams(corpus, 2, vocab);
  const TokenId a = *vocab->find("a");
  const TokenId b = *vocab->find("b");
  CHECK(table.count(NGram{a, b}) == 2);
  const auto& cofc = table.count_of_counts(2);
  CHECK(cofc.at(2) >= 1);
}

TEST_CASE("count_of_counts by hand") {
  // Counts {2, 1, 1} -> {1: 2, 2: 1}; single gram with count 5 -> {5: 1}.
  const Corpus corpus = {{"x", "y"}, {"x", "z"}, {"x", "y"}};
  auto vocab = vocab_of(corpus);
  const NGramTable table = count_ngrams(corpus, 2, vocab);
  const TokenId x = *vocab->find("x");
  const TokenId y = *vocab->find("y");
  const TokenId z = *vocab->find("z");
  CHECK(table.count(NGram{x, y}) == 2);
  CHECK(table.count(NGram{x, z}) == 1);
  // Σ r·n_r equals the total token mass at that order.
  std::uint64_t mass = 0;
  for (const auto& [r, nr] : table.count_of_counts(2)) mass += r * nr;
  std::uint64_t direct = 0;
  for (const auto& [gram, c] : table.counts(2)) direct += c;
  CHECK(mass == direct);
  // Bigrams: (<s>,x):3, (x,y):2, (y,</s>):2, (x,z):1, (z,</s>):1.
  CHECK(table.count_of_counts(2).at(1) == 2);
  CHECK(table.count_of_counts(2).at(2) == 2);
  CHECK(table.count_of_counts(2).at(3) == 1);
}

TEST_CASE("single gram count-of-counts") {
  const Corpus corpus = {{"q"}};
  auto vocab = vocab_of(corpus);
  const NGramTable table = count_ngrams(corpus, 2, vocab);
  const auto& cofc = table.count_of_counts(2);
  CHECK(cofc.size() == 1);
  CHECK(cofc.at(1) == 2);  // (<s>,q) and (q,</s>)
}

TEST_CASE("context totals are extension sums") {
  std::mt19937 rng(23);
  const Corpus corpus = random_corpus(rng, 60, 4);
  auto vocab = vocab_of(corpus);
  const NGramTable table = count_ngrams(corpus, 3, vocab);
  for (std::size_t k = 1; k <= 3; ++k) {
    std::unordered_map<NGram, std::uint64_t, NGramHash> sums;
    std::unordered_map<NGram, std::uint64_t, NGramHash> types;
    for (const auto& [gram, c] : table.counts(k)) {
      NGram ctx(gram.begin(), gram.end() - 1);
      sums[ctx] += c;
      types[ctx] += 1;
    }
    for (const auto& [ctx, total] : sums) {
      CHECK(table.context_total(ctx) == total);
      CHECK(table.successor_types(ctx) == types[ctx]);
      CHECK(table.successor_types(ctx) <= table.context_total(ctx));
    }
  }
}

TEST_CASE("continuation counts are distinct left extensions") {
  const Corpus corpus = {{"a", "b"}, {"c", "b"}, {"a", "b"}};
  auto vocab = vocab_of(corpus);
  const NGramTable table = count_ngrams(corpus, 2, vocab);
  const TokenId b = *vocab->find("b");
  // b continues a and c: two distinct left extensions regardless of repeats.
  CHECK(table.continuation_count(NGram{b}) == 2);
  const TokenId a = *vocab->find("a");
  CHECK(table.continuation_count(NGram{a}) == 1);  // only <s> precedes a
}

TEST_CASE("shard merge equals whole-corpus counting") {
  std::mt19937 rng(31);
  for (int iter = 0; iter < 20; ++iter) {
    const Corpus part1 = random_corpus(rng, 15, 5);
    const Corpus part2 = random_corpus(rng, 10, 5);
    Corpus whole = part1;
    whole.insert(whole.end(), part2.begin(), part2.end());
    auto vocab = vocab_of(whole);

    NGramCounter c1(3, vocab), c2(3, vocab);
    for (const auto& s : part1) c1.add_sentence(s);
    for (const auto& s : part2) c2.add_sentence(s);
    c1.merge(c2);
    const NGramTable merged = c1.finish();
    const NGramTable direct = count_ngrams(whole, 3, vocab);
    for (std::size_t k = 1; k <= 3; ++k) {
      REQUIRE(merged.counts(k).size() == direct.counts(k).size());
      for (const auto& [gram, c] : direct.counts(k))
        CHECK(merged.count(gram) == c);
      CHECK(merged.count_of_counts(k) == direct.count_of_counts(k));
    }
  }
}

TEST_CASE("order below one is rejected") {
  const Corpus corpus = {{"a"}};
  auto vocab = vocab_of(corpus);
  CHECK_THROWS_AS(count_ngrams(corpus, 0, vocab), UsageError);
}

TEST_CASE("statistics accessors validate the order") {
  const Corpus corpus = {{"a"}};
  auto vocab = vocab_of(corpus);
  const NGramTable table = count_ngrams(corpus, 2, vocab);
  CHECK_THROWS_AS(table.count_of_counts(3), UsageError);
  CHECK_THROWS_AS(table.count_of_counts(0), UsageError);
  CHECK_THROWS_AS(table.counts(3), UsageError);
  CHECK_THROWS_AS(table.continuation_count(NGram{0, 1}), UsageError);
}

TEST_CASE("counts dump is sorted and tab separated") {
  const Corpus corpus = {{"b", "a"}};
  auto vocab = vocab_of(corpus);
  const NGramTable table = count_ngrams(corpus, 1, vocab);
  std::ostringstream out;
  dump_counts(table, out);
  // Ids: <s>=0, </s>=1, <unk>=2, b=3, a=4.
  CHECK(out.str() == "<s>\t1\n</s>\t1\nb\t1\na\t1\n");
}
