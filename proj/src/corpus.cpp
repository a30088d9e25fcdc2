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

#include "morphlm/corpus.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "morphlm/error.hpp"
#include "morphlm/normalize.hpp"

namespace morphlm {

namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

}  // namespace

const std::string& Vocabulary::sentence_begin() {
  static const std::string s = "<s>";
  return s;
}

const std::string& Vocabulary::sentence_end() {
  static const std::string s = "</s>";
  return s;
}

const std::string& Vocabulary::unknown() {
  static const std::string s = "<unk>";
  return s;
}

Vocabulary::Vocabulary() {
  add(sentence_begin());
  add(sentence_end());
  add(unknown());
}

TokenId Vocabulary::add(std::string_view token) {
  auto it = token_to_id_.find(std::string(token));
  if (it != token_to_id_.end()) return it->second;
  const TokenId id = static_cast<TokenId>(id_to_token_.size());
  id_to_token_.emplace_back(token);
  token_to_id_.emplace(id_to_token_.back(), id);
  return id;
}

std::optional<TokenId> Vocabulary::find(std::string_view token) const {
  auto it = token_to_id_.find(std::string(token));
  if (it == token_to_id_.end()) return std::nullopt;
  return it->second;
}

TokenId Vocabulary::id_or_unknown(std::string_view token) const {
  auto id = find(token);
  return id ? *id : kUnknownId;
}

const std::string& Vocabulary::token(TokenId id) const {
  if (id >= id_to_token_.size())
    throw UsageError("token id " + std::to_string(id) + " out of range");
  return id_to_token_[id];
}

SentenceTokens tokenize_line(std::string_view line) {
  SentenceTokens tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_ascii_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_ascii_space(line[i])) ++i;
    if (i > start) tokens.push_back(to_nfc(line.substr(start, i - start)));
  }
  return tokens;
}

std::pair<Vocabulary, CorpusStats> build_vocabulary(const Corpus& corpus) {
  Vocabulary vocab;
  CorpusStats stats;
  std::uint64_t unique = 0;
  for (const SentenceTokens& sentence : corpus) {
    ++stats.sentence_count;
    for (const std::string& token : sentence) {
      ++stats.token_count;
      const std::size_t before = vocab.size();
      const TokenId id = vocab.add(token);
      if (vocab.size() > before && id > Vocabulary::kUnknownId) ++unique;
      // A literal reserved symbol in the text maps to the reserved id and
      // does not count as a corpus word type.
    }
  }
  stats.unique_word_count = unique;
  if (stats.token_count == 0)
    throw DataError("corpus contains no tokens");
  return {std::move(vocab), stats};
}

CorpusStats corpus_stats(const Corpus& corpus) {
  CorpusStats stats;
  std::unordered_set<std::string> types;
  for (const SentenceTokens& sentence : corpus) {
    ++stats.sentence_count;
    for (const std::string& token : sentence) {
      ++stats.token_count;
      types.insert(token);
    }
  }
  types.erase(Vocabulary::sentence_begin());
  types.erase(Vocabulary::sentence_end());
  types.erase(Vocabulary::unknown());
  stats.unique_word_count = types.size();
  return stats;
}

void for_each_sentence(std::istream& in,
                       const std::function<void(SentenceTokens&&)>& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    try {
      fn(tokenize_line(line));
    } catch (const DataError& e) {
      throw DataError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (in.bad()) throw IoError("read failure on corpus stream");
}

Corpus load_corpus(std::istream& in) {
  Corpus corpus;
  for_each_sentence(in, [&](SentenceTokens&& s) { corpus.push_back(std::move(s)); });
  return corpus;
}

Corpus load_corpus_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file: " + path);
  try {
    return load_corpus(in);
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

std::string join_tokens(const SentenceTokens& tokens) {
  std::string line;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) line.push_back(' ');
    line += tokens[i];
  }
  return line;
}

void save_corpus(const Corpus& corpus, std::ostream& out) {
  for (const SentenceTokens& sentence : corpus)
    out << join_tokens(sentence) << '\n';
  if (!out) throw IoError("write failure on corpus stream");
}

void save_corpus_file(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  save_corpus(corpus, out);
}

}  // namespace morphlm
