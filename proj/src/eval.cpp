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

#include "morphlm/eval.hpp"

#include <cmath>
#include <vector>

#include <json.hpp>

#include "morphlm/error.hpp"

namespace morphlm {

namespace {

using nlohmann::json;

}  // namespace

void PerplexityReport::finalize() {
  oov_rate = word_token_count == 0
                 ? 0.0
                 : 100.0 * static_cast<double>(oov_count) /
                       static_cast<double>(word_token_count);
  perplexity = scored_token_count == 0
                   ? 0.0
                   : std::pow(10.0, -total_log10_prob /
                                        static_cast<double>(scored_token_count));
  for (auto& [order, stat] : hits_per_order)
    stat.percent = scored_token_count == 0
                       ? 0.0
                       : 100.0 * static_cast<double>(stat.count) /
                             static_cast<double>(scored_token_count);
}

std::string PerplexityReport::to_json() const {
  json hits = json::object();
  for (const auto& [order, stat] : hits_per_order)
    hits[std::to_string(order)] = {{"count", stat.count},
                                   {"percent", stat.percent}};
  const json j = {{"scored_token_count", scored_token_count},
                  {"word_token_count", word_token_count},
                  {"sentence_count", sentence_count},
                  {"oov_count", oov_count},
                  {"oov_rate", oov_rate},
                  {"total_log10_prob", total_log10_prob},
                  {"perplexity", perplexity},
                  {"hits_per_order", hits}};
  return j.dump(2);
}

PerplexityReport PerplexityReport::from_json(const std::string& text) {
  PerplexityReport r;
  try {
    const json j = json::parse(text);
    r.scored_token_count = j.at("scored_token_count").get<std::uint64_t>();
    r.word_token_count = j.at("word_token_count").get<std::uint64_t>();
    r.sentence_count = j.at("sentence_count").get<std::uint64_t>();
    r.oov_count = j.at("oov_count").get<std::uint64_t>();
    r.oov_rate = j.at("oov_rate").get<double>();
    r.total_log10_prob = j.at("total_log10_prob").get<double>();
    r.perplexity = j.at("perplexity").get<double>();
    for (const auto& [key, value] : j.at("hits_per_order").items()) {
      HitStat stat;
      stat.count = value.at("count").get<std::uint64_t>();
      stat.percent = value.at("percent").get<double>();
      r.hits_per_order[std::stoi(key)] = stat;
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad perplexity report JSON: ") + e.what());
  }
  return r;
}

WerReport WerReport::from_counts(std::uint64_t reference_length,
                                 std::uint64_t insertions,
                                 std::uint64_t deletions,
                                 std::uint64_t substitutions) {
  if (deletions + substitutions > reference_length)
    throw UsageError("deletions + substitutions exceed the reference length");
  WerReport r;
  r.reference_length = reference_length;
  r.insertions = insertions;
  r.deletions = deletions;
  r.substitutions = substitutions;
  r.correct = reference_length - deletions - substitutions;
  const double denom =
      static_cast<double>(reference_length == 0 ? 1 : reference_length);
  const double errors =
      static_cast<double>(insertions + deletions + substitutions);
  r.wer_percent = 100.0 * errors / denom;
  r.word_accuracy_percent =
      100.0 * (static_cast<double>(reference_length) - errors) / denom;
  return r;
}

std::string WerReport::to_json() const {
  const json j = {{"reference_length", reference_length},
                  {"correct", correct},
                  {"insertions", insertions},
                  {"deletions", deletions},
                  {"substitutions", substitutions},
                  {"wer_percent", wer_percent},
                  {"word_accuracy_percent", word_accuracy_percent}};
  return j.dump(2);
}

WerReport WerReport::from_json(const std::string& text) {
  WerReport r;
  try {
    const json j = json::parse(text);
    r.reference_length = j.at("reference_length").get<std::uint64_t>();
    r.correct = j.at("correct").get<std::uint64_t>();
    r.insertions = j.at("insertions").get<std::uint64_t>();
    r.deletions = j.at("deletions").get<std::uint64_t>();
    r.substitutions = j.at("substitutions").get<std::uint64_t>();
    r.wer_percent = j.at("wer_percent").get<double>();
    r.word_accuracy_percent = j.at("word_accuracy_percent").get<double>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad WER report JSON: ") + e.what());
  }
  return r;
}

PerplexityReport evaluate_perplexity(const BackoffModel& model,
                                     const Corpus& test) {
  if (test.empty()) throw DataError("test corpus is empty");
  PerplexityReport report;
  for (int k = 1; k <= static_cast<int>(model.order()); ++k)
    report.hits_per_order[k];  // stable schema even when a bucket stays empty
  for (const SentenceTokens& sentence : test) {
    ++report.sentence_count;
    report.word_token_count += sentence.size();
    const SequenceScore score = model.score_sequence(sentence);
    report.total_log10_prob += score.total_log10;
    report.scored_token_count += score.scored_count;
    report.oov_count += score.oov_count;
    for (int order : score.hit_orders) ++report.hits_per_order[order].count;
  }
  report.finalize();
  return report;
}

namespace {

enum class Move : unsigned char { kMatch, kSubstitute, kDelete, kInsert };

}  // namespace

WerReport align_wer(const SentenceTokens& reference,
                    const SentenceTokens& hypothesis) {
  const std::size_t n = reference.size();
  const std::size_t m = hypothesis.size();
  std::vector<std::uint32_t> cost((n + 1) * (m + 1), 0);
  std::vector<Move> move((n + 1) * (m + 1), Move::kMatch);
  auto at = [m](std::size_t i, std::size_t j) { return i * (m + 1) + j; };

  for (std::size_t i = 1; i <= n; ++i) {
    cost[at(i, 0)] = static_cast<std::uint32_t>(i);
    move[at(i, 0)] = Move::kDelete;
  }
  for (std::size_t j = 1; j <= m; ++j) {
    cost[at(0, j)] = static_cast<std::uint32_t>(j);
    move[at(0, j)] = Move::kInsert;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const bool match = reference[i - 1] == hypothesis[j - 1];
      const std::uint32_t diag = cost[at(i - 1, j - 1)] + (match ? 0 : 1);
      const std::uint32_t up = cost[at(i - 1, j)] + 1;    // deletion
      const std::uint32_t left = cost[at(i, j - 1)] + 1;  // insertion
      // Tie order: match, substitution, deletion, insertion.
      std::uint32_t best = diag;
      Move chosen = match ? Move::kMatch : Move::kSubstitute;
      if (up < best) {
        best = up;
        chosen = Move::kDelete;
      }
      if (left < best) {
        best = left;
        chosen = Move::kInsert;
      }
      cost[at(i, j)] = best;
      move[at(i, j)] = chosen;
    }
  }

  std::uint64_t insertions = 0, deletions = 0, substitutions = 0;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    switch (i == 0 ? Move::kInsert : j == 0 ? Move::kDelete : move[at(i, j)]) {
      case Move::kMatch:
        --i;
        --j;
        break;
      case Move::kSubstitute:
        ++substitutions;
        --i;
        --j;
        break;
      case Move::kDelete:
        ++deletions;
        --i;
        break;
      case Move::kInsert:
        ++insertions;
        --j;
        break;
    }
  }
  return WerReport::from_counts(n, insertions, deletions, substitutions);
}

WerReport corpus_wer(const Corpus& reference, const Corpus& hypothesis) {
  if (reference.size() != hypothesis.size())
    throw DataError("reference and hypothesis line counts differ (" +
                    std::to_string(reference.size()) + " vs " +
                    std::to_string(hypothesis.size()) + ")");
  std::uint64_t ref_len = 0, ins = 0, del = 0, sub = 0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const WerReport r = align_wer(reference[i], hypothesis[i]);
    ref_len += r.reference_length;
    ins += r.insertions;
    del += r.deletions;
    sub += r.substitutions;
  }
  return WerReport::from_counts(ref_len, ins, del, sub);
}

}  // namespace morphlm
