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
#include <sstream>

#include "morphlm/arpa.hpp"
#include "morphlm/error.hpp"

using namespace morphlm;

namespace {

std::shared_ptr<Vocabulary> vocab_of(const Corpus& corpus) {
  auto [vocab, stats] = build_vocabulary(corpus);
  return std::make_shared<Vocabulary>(std::move(vocab));
}

BackoffModel train_toy(const Corpus& corpus, Smoothing kind,
                       std::size_t order) {
  auto vocab = vocab_of(corpus);
  const NGramTable table = count_ngrams(corpus, order, vocab);
  return estimate(table, {kind, 7, std::nullopt}, order);
}

}  // namespace

TEST_CASE("single word unigram model declares four entries") {
  const BackoffModel model =
      train_toy({{"word"}}, Smoothing::kWittenBell, 1);
  std::ostringstream out;
  write_arpa(model, out);
  const std::string text = out.str();
  CHECK(text.rfind("\\data\\\n", 0) == 0);  // first line is the header
  CHECK(text.find("ngram 1=4") != std::string::npos);
  CHECK(text.find("\\end\\") != std::string::npos);
}

TEST_CASE("writing an empty document fails") {
  ArpaDocument doc;
  std::ostringstream out;
  CHECK_THROWS_AS(write_arpa(doc, out), UsageError);
}

TEST_CASE("round trip preserves values within 1e-6") {
  std::mt19937 rng(13);
  Corpus corpus;
  for (int i = 0; i < 50; ++i) {
    SentenceTokens s;
    for (int j = 0; j < 5; ++j)
      s.push_back(std::string(1, static_cast<char>('a' + rng() % 7)));
    corpus.push_back(s);
  }
  for (Smoothing kind :
       {Smoothing::kGoodTuring, Smoothing::kWittenBell, Smoothing::kKneserNey}) {
    const BackoffModel model = train_toy(corpus, kind, 3);
    std::ostringstream out;
    write_arpa(model, out);
    std::istringstream in(out.str());
    const BackoffModel reread = read_arpa(in);
    REQUIRE(reread.order() == model.order());
    for (std::size_t k = 1; k <= model.order(); ++k) {
      REQUIRE(reread.entries(k).size() == model.entries(k).size());
      for (const auto& [gram, entry] : model.entries(k)) {
        // Token ids may differ between vocabularies; map through strings.
        NGram mapped;
        for (TokenId id : gram)
          mapped.push_back(*reread.vocab().find(model.vocab().token(id)));
        const ModelEntry* other = reread.find(mapped);
        REQUIRE(other != nullptr);
        CHECK(other->log10_prob ==
              doctest::Approx(entry.log10_prob).epsilon(1e-6));
        CHECK(other->has_bow == entry.has_bow);
        if (entry.has_bow)
          CHECK(other->log10_bow ==
                doctest::Approx(entry.log10_bow).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("canonical documents rewrite byte-identically") {
  const BackoffModel model =
      train_toy({{"a", "b", "c"}, {"b", "c", "a"}, {"a", "c"}},
                Smoothing::kKneserNey, 3);
  std::ostringstream first;
  write_arpa(model, first);
  std::istringstream in(first.str());
  const ArpaDocument doc = parse_arpa(in);
  std::ostringstream second;
  write_arpa(doc, second);
  CHECK(first.str() == second.str());
}

TEST_CASE("entries are sorted lexicographically by token strings") {
  const BackoffModel model = train_toy(
      {{"delta", "alpha"}, {"charlie", "bravo"}}, Smoothing::kWittenBell, 2);
  std::ostringstream out;
  write_arpa(model, out);
  std::istringstream in(out.str());
  const ArpaDocument doc = parse_arpa(in);
  for (const auto& order : doc.orders) {
    for (std::size_t i = 1; i < order.size(); ++i)
      CHECK(order[i - 1].tokens < order[i].tokens);
  }
}

TEST_CASE("count mismatch names the order") {
  const std::string text =
      "\\data\\\n"
      "ngram 1=2\n"
      "ngram 2=3\n"
      "\n"
      "\\1-grams:\n"
      "-0.5\ta\t-0.2\n"
      "-0.5\tb\n"
      "\n"
      "\\2-grams:\n"
      "-0.3\ta b\n"
      "\n"
      "\\end\\\n";
  std::istringstream in(text);
  try {
    parse_arpa(in);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("order 2") != std::string::npos);
  }
}

TEST_CASE("missing end marker is a parse error") {
  const std::string text =
      "\\data\\\n"
      "ngram 1=1\n"
      "\n"
      "\\1-grams:\n"
      "-0.5\ta\n";
  std::istringstream in(text);
  CHECK_THROWS_AS(parse_arpa(in), ParseError);
}

TEST_CASE("malformed numbers carry a line number") {
  const std::string text =
      "\\data\\\n"
      "ngram 1=1\n"
      "\n"
      "\\1-grams:\n"
      "notanumber\ta\n"
      "\n"
      "\\end\\\n";
  std::istringstream in(text);
  try {
    parse_arpa(in);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 5") != std::string::npos);
  }
}

TEST_CASE("duplicate entries are rejected") {
  const std::string text =
      "\\data\\\n"
      "ngram 1=2\n"
      "\n"
      "\\1-grams:\n"
      "-0.5\ta\n"
      "-0.6\ta\n"
      "\n"
      "\\end\\\n";
  std::istringstream in(text);
  CHECK_THROWS_AS(parse_arpa(in), ParseError);
}

TEST_CASE("higher order tokens must exist as unigrams") {
  const std::string text =
      "\\data\\\n"
      "ngram 1=1\n"
      "ngram 2=1\n"
      "\n"
      "\\1-grams:\n"
      "-0.5\ta\t-0.1\n"
      "\n"
      "\\2-grams:\n"
      "-0.3\ta ghost\n"
      "\n"
      "\\end\\\n";
  std::istringstream in(text);
  CHECK_THROWS_AS(read_arpa(in), ParseError);
}

TEST_CASE("infinite log values are floored on write") {
  ArpaDocument doc;
  doc.orders.resize(1);
  ArpaEntry e;
  e.log10_prob = -std::numeric_limits<double>::infinity();
  e.tokens = {"a"};
  doc.orders[0].push_back(e);
  std::ostringstream out;
  write_arpa(doc, out);
  CHECK(out.str().find("-99\ta") != std::string::npos);
}

TEST_CASE("windows line endings are tolerated") {
  const std::string text =
      "\\data\\\r\n"
      "ngram 1=1\r\n"
      "\r\n"
      "\\1-grams:\r\n"
      "-0.5\ta\r\n"
      "\r\n"
      "\\end\\\r\n";
  std::istringstream in(text);
  const ArpaDocument doc = parse_arpa(in);
  CHECK(doc.orders[0].size() == 1);
  CHECK(doc.orders[0][0].tokens[0] == "a");
}
