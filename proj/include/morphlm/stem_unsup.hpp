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

#ifndef MORPHLM_STEM_UNSUP_HPP_
#define MORPHLM_STEM_UNSUP_HPP_

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "morphlm/corpus.hpp"

namespace morphlm {

// Bipartite prefix/suffix graph: an edge (p, s) exists when the
// concatenation p+s is a vocabulary word.
class SegmentationGraph {
 public:
  using Adjacency =
      std::unordered_map<std::string, std::unordered_set<std::string>>;

  const Adjacency& prefixes() const { return prefix_to_suffixes_; }
  const Adjacency& suffixes() const { return suffix_to_prefixes_; }

  bool has_edge(const std::string& prefix, const std::string& suffix) const;
  std::size_t prefix_degree(const std::string& prefix) const;
  std::size_t suffix_degree(const std::string& suffix) const;
  std::size_t edge_count() const;

  void add_edge(const std::string& prefix, const std::string& suffix);
  void remove_prefix(const std::string& prefix);
  void remove_suffix(const std::string& suffix);

  // Sorted copies, for export and deterministic reports.
  std::vector<std::string> sorted_prefixes() const;
  std::vector<std::string> sorted_suffixes() const;

 private:
  Adjacency prefix_to_suffixes_;
  Adjacency suffix_to_prefixes_;
};

struct StemThresholds {
  std::size_t t_stem = 1;    // minimum distinct-suffix degree for a prefix
  std::size_t t_suffix = 1;  // minimum distinct-prefix degree for a suffix

  void validate() const;
};

// Splits every vocabulary word at every internal code point position and
// records each (prefix, suffix) pair.
SegmentationGraph build_segmentation_graph(
    const std::set<std::string>& vocabulary);
SegmentationGraph build_segmentation_graph(const Corpus& corpus);

// Iteratively deletes vertices whose degree falls below their side's
// threshold until none violates: the unique maximal admissible subgraph.
SegmentationGraph prune_graph(SegmentationGraph graph,
                              const StemThresholds& thresholds);

// Splits at the surviving edge with the longest prefix, if any.
SentenceTokens segment_word(const std::string& word,
                            const SegmentationGraph& pruned,
                            const std::string& marker);

struct SegmentationReport {
  std::uint64_t unique_before = 0;
  std::uint64_t unique_after = 0;
  std::uint64_t split_word_types = 0;
};

Corpus segment_corpus(const Corpus& corpus, const SegmentationGraph& pruned,
                      const std::string& marker,
                      SegmentationReport* report = nullptr);

// One entry per line, sorted, UTF-8.
void export_string_set(const std::vector<std::string>& entries,
                       std::ostream& out);

}  // namespace morphlm

#endif  // MORPHLM_STEM_UNSUP_HPP_
