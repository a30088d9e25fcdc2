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

#include <cmath>
#include <random>
#include <set>

#include "morphlm/error.hpp"
#include "morphlm/smoothing.hpp"

using namespace morphlm;

namespace {

std::shared_ptr<Vocabulary> vocab_of(const Corpus& corpus) {
  auto [vocab, stats] = build_vocabulary(corpus);
  return std::make_shared<Vocabulary>(std::move(vocab));
}

Corpus random_corpus(std::mt19937& rng, int sentences, int vocab_size,
                     int max_len = 8) {
  Corpus corpus;
  for (int i = 0; i < sentences; ++i) {
    SentenceTokens s;
    const int len = 1 + static_cast<int>(rng() % max_len);
    for (int j = 0; j < len; ++j) {
      std::string t = "w";
      t += std::to_string(rng() % vocab_size);
      s.push_back(t);
    }
    corpus.push_back(s);
  }
  return corpus;
}

const SmoothingMethod kAllMethods[] = {
    {Smoothing::kGoodTuring, 7, std::nullopt},
    {Smoothing::kLinearDiscount, 7, std::nullopt},
    {Smoothing::kAbsoluteDiscount, 7, std::nullopt},
    {Smoothing::kWittenBell, 7, std::nullopt},
    {Smoothing::kKneserNey, 7, std::nullopt},
};

// Brute-force oracle: every observed context (all orders, including the
// empty one) must carry a conditional distribution summing to one over the
// whole vocabulary.
void check_normalization(const BackoffModel& model, const NGramTable& table) {
  std::set<NGram> contexts;
  contexts.insert(NGram{});
  for (std::size_t k = 2; k <= model.order(); ++k)
    for (const auto& [gram, c] : table.counts(k))
      contexts.insert(NGram(gram.begin(), gram.end() - 1));
  for (const NGram& ctx : contexts) {
    double sum = 0.0;
    for (TokenId w = 0; w < model.vocab().size(); ++w)
      sum += model.conditional(ctx, w).prob;
    CAPTURE(ctx.size());
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));
  }
}

}  // namespace

TEST_CASE("good-turing adjusted count worked example") {
  // r = 1, n_1 = 3, n_2 = 1: r* = (1+1)*1/3 = 2/3.
  CHECK(good_turing_adjusted_count(1, 3, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("good-turing adjusted count property") {
  std::mt19937 rng(3);
  for (int iter = 0; iter < 200; ++iter) {
    const std::uint64_t r = 1 + rng() % 7;
    const std::uint64_t nr = 1 + rng() % 50;
    const std::uint64_t nr1 = rng() % 50;
    CHECK(good_turing_adjusted_count(r, nr, nr1) ==
          doctest::Approx(static_cast<double>(r + 1) * nr1 / nr).epsilon(1e-12));
  }
}

TEST_CASE("absolute discount worked example") {
  // n_1 = 3, n_2 = 1: D = 3 / (3 + 2) = 0.6.
  CHECK(absolute_discount_estimate(3, 1) == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("witten-bell worked example") {
  // c(a) = 3, T(a) = 2, c(a,b) = 2, lower P(b) = 0.3:
  // P(b|a) = (2 + 2*0.3) / (3 + 2) = 0.52.
  CHECK(witten_bell_prob(2, 3, 2, 0.3) == doctest::Approx(0.52).epsilon(1e-12));
}

TEST_CASE("every method normalizes on toy corpora") {
  std::mt19937 rng(101);
  const Corpus corpora[] = {
      random_corpus(rng, 40, 6),
      random_corpus(rng, 120, 10),
      {{"a", "b", "a", "b"}, {"a", "b", "c"}, {"c", "a", "b"}},
  };
  for (const Corpus& corpus : corpora) {
    auto vocab = vocab_of(corpus);
    const NGramTable table = count_ngrams(corpus, 3, vocab);
    for (const SmoothingMethod& method : kAllMethods) {
      CAPTURE(method.name());
      const BackoffModel model = estimate(table, method, 3);
      check_normalization(model, table);
    }
  }
}

TEST_CASE("kneser-ney unigram continuation distribution sums to one") {
  std::mt19937 rng(55);
  const Corpus corpus = random_corpus(rng, 80, 8);
  auto vocab = vocab_of(corpus);
  const NGramTable table = count_ngrams(corpus, 3, vocab);
  const BackoffModel model =
      estimate(table, {Smoothing::kKneserNey, 7, std::nullopt}, 3);
  double sum = 0.0;
  for (TokenId w = 0; w < model.vocab().size(); ++w)
    sum += model.conditional(NGram{}, w).prob;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("stored n-grams are returned exactly with full hit order") {
  const Corpus corpus = {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "b", "c"}};
  auto vocab = vocab_of(corpus);
  const NGramTable table = count_ngrams(corpus, 3, vocab);
  for (const SmoothingMethod& method : kAllMethods) {
    const BackoffModel model = estimate(table, method, 3);
    for (const auto& [gram, entry] : model.entries(3)) {
      const std::span<const TokenId> g(gram);
      const Prediction p = model.conditional(g.first(2), gram.back());
      CHECK(p.hit_order == 3);
      CHECK(p.log10_prob == entry.log10_prob);
      CHECK(p.prob == std::pow(10.0, entry.log10_prob));
    }
  }
}

TEST_CASE("back-off chain multiplies stored weights") {
  auto vocab = std::make_shared<Vocabulary>();
  const TokenId a = vocab->add("a");
  const TokenId b = vocab->add("b");
  const TokenId c = vocab->add("c");
  const TokenId d = vocab->add("d");
  BackoffModel model(3, vocab);
  model.entries(1).emplace(NGram{b}, ModelEntry{-0.4, -0.3, true});
  model.entries(1).emplace(NGram{c}, ModelEntry{-0.5, 0.0, false});
  model.entries(1).emplace(NGram{d}, ModelEntry{-0.8, 0.0, false});
  model.entries(2).emplace(NGram{a, b}, ModelEntry{-0.7, -0.2, true});
  model.entries(2).emplace(NGram{b, c}, ModelEntry{-1.0, 0.0, false});

  SUBCASE("direct trigram hit") {
    model.entries(3).emplace(NGram{a, b, c}, ModelEntry{-0.5, 0.0, false});
    const Prediction p = model.conditional(NGram{a, b}, c);
    CHECK(p.hit_order == 3);
    CHECK(p.prob == doctest::Approx(std::pow(10.0, -0.5)).epsilon(1e-12));
  }
  SUBCASE("one back-off step") {
    // Trigram absent: bow(a,b) = -0.2 plus bigram (b,c) = -1.0.
    const Prediction p = model.conditional(NGram{a, b}, c);
    CHECK(p.hit_order == 2);
    CHECK(p.log10_prob == doctest::Approx(-1.2).epsilon(1e-12));
    CHECK(p.prob == doctest::Approx(0.0631).epsilon(1e-3));
  }
  SUBCASE("two back-off steps reach the unigram") {
    // (a,b,d) and (b,d) absent: bow(a,b) + bow(b) + unigram d.
    const Prediction p = model.conditional(NGram{a, b}, d);
    CHECK(p.hit_order == 1);
    CHECK(p.log10_prob == doctest::Approx(-0.2 - 0.3 - 0.8).epsilon(1e-12));
  }
}

TEST_CASE("sequence scoring pads and counts oov") {
  const Corpus corpus = {{"a", "b"}, {"b", "a"}};
  auto vocab = vocab_of(corpus);
  const NGramTable table = count_ngrams(corpus, 2, vocab);
  const BackoffModel model =
      estimate(table, {Smoothing::kWittenBell, 7, std::nullopt}, 2);

  SUBCASE("empty sentence scores exactly the end symbol") {
    const SequenceScore s = model.score_sequence({});
    CHECK(s.scored_count == 1);
    CHECK(s.oov_count == 0);
    CHECK(s.hit_orders.size() == 1);
  }
  SUBCASE("one known token scores token plus end symbol") {
    const SequenceScore s = model.score_sequence({"a"});
    CHECK(s.scored_count == 2);
    CHECK(s.oov_count == 0);
  }
  SUBCASE("unknown tokens are excluded from scoring") {
    const SequenceScore s = model.score_sequence({"a", "zzz", "b"});
    CHECK(s.oov_count == 1);
    CHECK(s.scored_count == 3);  // a, b, </s>
    CHECK(s.hit_orders.size() == 3);
  }
}

TEST_CASE("unknown symbol receives a nonzero unigram probability") {
  const Corpus corpus = {{"a", "b"}, {"a", "c"}};
  auto vocab = vocab_of(corpus);
  const NGramTable table = count_ngrams(corpus, 2, vocab);
  for (const SmoothingMethod& method : kAllMethods) {
    CAPTURE(method.name());
    const BackoffModel model = estimate(table, method, 2);
    const ModelEntry* unk = model.find(NGram{Vocabulary::kUnknownId});
    REQUIRE(unk != nullptr);
    CHECK(std::pow(10.0, unk->log10_prob) > 0.0);
    CHECK(unk->log10_prob > kLog10Floor);
  }
}

TEST_CASE("estimation is deterministic") {
  std::mt19937 rng(77);
  const Corpus corpus = random_corpus(rng, 60, 9);
  auto vocab = vocab_of(corpus);
  const NGramTable table = count_ngrams(corpus, 3, vocab);
  for (const SmoothingMethod& method : kAllMethods) {
    const BackoffModel m1 = estimate(table, method, 3);
    const BackoffModel m2 = estimate(table, method, 3);
    for (std::size_t k = 1; k <= 3; ++k) {
      REQUIRE(m1.entries(k).size() == m2.entries(k).size());
      for (const auto& [gram, e1] : m1.entries(k)) {
        const ModelEntry* e2 = m2.find(gram);
        REQUIRE(e2 != nullptr);
        CHECK(e1.log10_prob == e2->log10_prob);  // bit-identical
        CHECK(e1.has_bow == e2->has_bow);
        CHECK(e1.log10_bow == e2->log10_bow);
      }
    }
  }
}

TEST_CASE("degenerate statistics fall back with a warning") {
  // All bigrams singletons: n_2 = 0 breaks the discount estimate.
  const Corpus corpus = {{"a", "b"}, {"c", "d"}};
  auto vocab = vocab_of(corpus);
  const NGramTable table = count_ngrams(corpus, 2, vocab);
  std::vector<std::string> warnings;
  const BackoffModel model = estimate(
      table, {Smoothing::kAbsoluteDiscount, 7, std::nullopt}, 2, &warnings);
  CHECK(!warnings.empty());
  check_normalization(model, table);
}

TEST_CASE("order mismatch is a usage error") {
  const Corpus corpus = {{"a", "b"}};
  auto vocab = vocab_of(corpus);
  const NGramTable table = count_ngrams(corpus, 2, vocab);
  CHECK_THROWS_AS(estimate(table, kAllMethods[0], 3), UsageError);
  CHECK_THROWS_AS(estimate(table, kAllMethods[0], 0), UsageError);
}

TEST_CASE("lower order can be estimated from a higher order table") {
  const Corpus corpus = {{"a", "b", "c"}, {"b", "c", "a"}};
  auto vocab = vocab_of(corpus);
  const NGramTable table = count_ngrams(corpus, 3, vocab);
  for (const SmoothingMethod& method : kAllMethods) {
    const BackoffModel model = estimate(table, method, 2);
    CHECK(model.order() == 2);
    check_normalization(model, count_ngrams(corpus, 2, vocab));
  }
}

TEST_CASE("every stored n-gram's context is itself stored") {
  std::mt19937 rng(88);
  const Corpus corpus = random_corpus(rng, 50, 7);
  auto vocab = vocab_of(corpus);
  const NGramTable table = count_ngrams(corpus, 3, vocab);
  for (const SmoothingMethod& method : kAllMethods) {
    const BackoffModel model = estimate(table, method, 3);
    for (std::size_t k = 2; k <= 3; ++k) {
      for (const auto& [gram, entry] : model.entries(k)) {
        const NGram ctx(gram.begin(), gram.end() - 1);
        const ModelEntry* parent = model.find(ctx);
        REQUIRE(parent != nullptr);
        CHECK(parent->has_bow);
      }
    }
  }
}

TEST_CASE("invalid method parameters are rejected") {
  SmoothingMethod bad_cutoff{Smoothing::kGoodTuring, 0, std::nullopt};
  CHECK_THROWS_AS(bad_cutoff.validate(), UsageError);
  SmoothingMethod bad_discount{Smoothing::kKneserNey, 7, 1.5};
  CHECK_THROWS_AS(bad_discount.validate(), UsageError);
  CHECK_THROWS_AS(SmoothingMethod::from_name("no-such-method"), UsageError);
}
