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

#include "morphlm/stem_unsup.hpp"

#include <algorithm>
#include <deque>
#include <ostream>

#include "morphlm/error.hpp"
#include "morphlm/utf8.hpp"

namespace morphlm {

bool SegmentationGraph::has_edge(const std::string& prefix,
                                 const std::string& suffix) const {
  auto it = prefix_to_suffixes_.find(prefix);
  return it != prefix_to_suffixes_.end() && it->second.count(suffix) > 0;
}

std::size_t SegmentationGraph::prefix_degree(const std::string& prefix) const {
  auto it = prefix_to_suffixes_.find(prefix);
  return it == prefix_to_suffixes_.end() ? 0 : it->second.size();
}

std::size_t SegmentationGraph::suffix_degree(const std::string& suffix) const {
  auto it = suffix_to_prefixes_.find(suffix);
  return it == suffix_to_prefixes_.end() ? 0 : it->second.size();
}

std::size_t SegmentationGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& [p, ss] : prefix_to_suffixes_) n += ss.size();
  return n;
}

void SegmentationGraph::add_edge(const std::string& prefix,
                                 const std::string& suffix) {
  if (prefix.empty() || suffix.empty())
    throw UsageError("graph edges require non-empty prefix and suffix");
  prefix_to_suffixes_[prefix].insert(suffix);
  suffix_to_prefixes_[suffix].insert(prefix);
}

void SegmentationGraph::remove_prefix(const std::string& prefix) {
  auto it = prefix_to_suffixes_.find(prefix);
  if (it == prefix_to_suffixes_.end()) return;
  for (const std::string& suffix : it->second) {
    auto sit = suffix_to_prefixes_.find(suffix);
    if (sit != suffix_to_prefixes_.end()) {
      sit->second.erase(prefix);
      if (sit->second.empty()) suffix_to_prefixes_.erase(sit);
    }
  }
  prefix_to_suffixes_.erase(it);
}

void SegmentationGraph::remove_suffix(const std::string& suffix) {
  auto it = suffix_to_prefixes_.find(suffix);
  if (it == suffix_to_prefixes_.end()) return;
  for (const std::string& prefix : it->second) {
    auto pit = prefix_to_suffixes_.find(prefix);
    if (pit != prefix_to_suffixes_.end()) {
      pit->second.erase(suffix);
      if (pit->second.empty()) prefix_to_suffixes_.erase(pit);
    }
  }
  suffix_to_prefixes_.erase(it);
}

std::vector<std::string> SegmentationGraph::sorted_prefixes() const {
  std::vector<std::string> out;
  out.reserve(prefix_to_suffixes_.size());
  for (const auto& [p, ss] : prefix_to_suffixes_) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> SegmentationGraph::sorted_suffixes() const {
  std::vector<std::string> out;
  out.reserve(suffix_to_prefixes_.size());
  for (const auto& [s, ps] : suffix_to_prefixes_) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

void StemThresholds::validate() const {
  if (t_stem < 1 || t_suffix < 1)
    throw UsageError("stem and suffix thresholds must be at least 1");
}

SegmentationGraph build_segmentation_graph(
    const std::set<std::string>& vocabulary) {
  if (vocabulary.empty()) throw DataError("empty vocabulary");
  SegmentationGraph graph;
  for (const std::string& word : vocabulary) {
    const std::vector<char32_t> cps = utf8::decode(word);
    for (std::size_t i = 1; i < cps.size(); ++i) {
      std::string prefix, suffix;
      for (std::size_t j = 0; j < i; ++j) utf8::append(prefix, cps[j]);
      for (std::size_t j = i; j < cps.size(); ++j) utf8::append(suffix, cps[j]);
      graph.add_edge(prefix, suffix);
    }
  }
  return graph;
}

SegmentationGraph build_segmentation_graph(const Corpus& corpus) {
  std::set<std::string> vocabulary;
  for (const SentenceTokens& sentence : corpus)
    for (const std::string& token : sentence) vocabulary.insert(token);
  return build_segmentation_graph(vocabulary);
}

SegmentationGraph prune_graph(SegmentationGraph graph,
                              const StemThresholds& thresholds) {
  thresholds.validate();
  // Worklist peeling: removing a vertex lowers its neighbours' degrees,
  // which may cascade.  The fixed point is unique regardless of order.
  std::deque<std::pair<bool, std::string>> queue;  // (is_prefix, vertex)
  for (const auto& [p, ss] : graph.prefixes())
    if (ss.size() < thresholds.t_stem) queue.emplace_back(true, p);
  for (const auto& [s, ps] : graph.suffixes())
    if (ps.size() < thresholds.t_suffix) queue.emplace_back(false, s);

  while (!queue.empty()) {
    auto [is_prefix, vertex] = std::move(queue.front());
    queue.pop_front();
    if (is_prefix) {
      auto it = graph.prefixes().find(vertex);
      if (it == graph.prefixes().end()) continue;
      const std::vector<std::string> neighbours(it->second.begin(),
                                                it->second.end());
      graph.remove_prefix(vertex);
      for (const std::string& s : neighbours) {
        const std::size_t d = graph.suffix_degree(s);
        if (d > 0 && d < thresholds.t_suffix) queue.emplace_back(false, s);
      }
    } else {
      auto it = graph.suffixes().find(vertex);
      if (it == graph.suffixes().end()) continue;
      const std::vector<std::string> neighbours(it->second.begin(),
                                                it->second.end());
      graph.remove_suffix(vertex);
      for (const std::string& p : neighbours) {
        const std::size_t d = graph.prefix_degree(p);
        if (d > 0 && d < thresholds.t_stem) queue.emplace_back(true, p);
      }
    }
  }
  return graph;
}

SentenceTokens segment_word(const std::string& word,
                            const SegmentationGraph& pruned,
                            const std::string& marker) {
  const std::vector<char32_t> cps = utf8::decode(word);
  if (cps.size() < 2) return {word};
  // Longest surviving prefix wins.
  for (std::size_t i = cps.size() - 1; i >= 1; --i) {
    std::string prefix, suffix;
    for (std::size_t j = 0; j < i; ++j) utf8::append(prefix, cps[j]);
    for (std::size_t j = i; j < cps.size(); ++j) utf8::append(suffix, cps[j]);
    if (pruned.has_edge(prefix, suffix)) return {prefix, marker + suffix};
  }
  return {word};
}

Corpus segment_corpus(const Corpus& corpus, const SegmentationGraph& pruned,
                      const std::string& marker, SegmentationReport* report) {
  std::unordered_set<std::string> before, after, split_types;
  Corpus out;
  out.reserve(corpus.size());
  for (const SentenceTokens& sentence : corpus) {
    SentenceTokens rewritten;
    rewritten.reserve(sentence.size());
    for (const std::string& word : sentence) {
      if (word.find(marker) != std::string::npos)
        throw DataError("corpus token '" + word +
                        "' contains the marker character");
      before.insert(word);
      SentenceTokens parts = segment_word(word, pruned, marker);
      if (parts.size() == 2) split_types.insert(word);
      for (std::string& part : parts) {
        after.insert(part);
        rewritten.push_back(std::move(part));
      }
    }
    out.push_back(std::move(rewritten));
  }
  if (report) {
    report->unique_before = before.size();
    report->unique_after = after.size();
    report->split_word_types = split_types.size();
  }
  return out;
}

void export_string_set(const std::vector<std::string>& entries,
                       std::ostream& out) {
  for (const std::string& entry : entries) out << entry << '\n';
  if (!out) throw IoError("write failure while exporting string set");
}

}  // namespace morphlm
