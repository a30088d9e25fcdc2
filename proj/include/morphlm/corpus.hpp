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

#ifndef MORPHLM_CORPUS_HPP_
#define MORPHLM_CORPUS_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace morphlm {

using TokenId = std::uint32_t;

// One sentence: whitespace-free, NFC-normalized word strings.
using SentenceTokens = std::vector<std::string>;
using Corpus = std::vector<SentenceTokens>;

// Token <-> id bijection.  The three reserved symbols always occupy the
// lowest ids so models and count tables can special-case them by constant.
class Vocabulary {
 public:
  static constexpr TokenId kSentenceBeginId = 0;
  static constexpr TokenId kSentenceEndId = 1;
  static constexpr TokenId kUnknownId = 2;

  static const std::string& sentence_begin();  // "<s>"
  static const std::string& sentence_end();    // "</s>"
  static const std::string& unknown();         // "<unk>"

  Vocabulary();

  // Returns the existing id or inserts a new entry.
  TokenId add(std::string_view token);

  std::optional<TokenId> find(std::string_view token) const;
  TokenId id_or_unknown(std::string_view token) const;
  const std::string& token(TokenId id) const;
  std::size_t size() const { return id_to_token_.size(); }

 private:
  std::unordered_map<std::string, TokenId> token_to_id_;
  std::vector<std::string> id_to_token_;
};

struct CorpusStats {
  std::uint64_t sentence_count = 0;
  std::uint64_t token_count = 0;
  std::uint64_t unique_word_count = 0;  // reserved symbols not included
};

// Splits on ASCII whitespace and NFC-normalizes each token.  Throws DataError
// on invalid UTF-8. An empty or all-whitespace line yields an empty sentence.
SentenceTokens tokenize_line(std::string_view line);

// First-occurrence id assignment over the whole stream; reserved symbols are
// injected up front.  Throws DataError when the corpus has no tokens at all.
std::pair<Vocabulary, CorpusStats> build_vocabulary(const Corpus& corpus);

CorpusStats corpus_stats(const Corpus& corpus);

// Plain text corpus: one sentence per line, space-separated tokens, UTF-8.
// Errors are reported with 1-based line numbers.
void for_each_sentence(std::istream& in,
                       const std::function<void(SentenceTokens&&)>& fn);
Corpus load_corpus(std::istream& in);
Corpus load_corpus_file(const std::string& path);
void save_corpus(const Corpus& corpus, std::ostream& out);
void save_corpus_file(const Corpus& corpus, const std::string& path);

std::string join_tokens(const SentenceTokens& tokens);

}  // namespace morphlm

#endif  // MORPHLM_CORPUS_HPP_
