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

#ifndef MORPHLM_SMOOTHING_HPP_
#define MORPHLM_SMOOTHING_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "morphlm/counts.hpp"

namespace morphlm {

enum class Smoothing {
  kGoodTuring,
  kLinearDiscount,
  kAbsoluteDiscount,
  kWittenBell,
  kKneserNey,
};

struct SmoothingMethod {
  Smoothing kind = Smoothing::kWittenBell;
  // Good-Turing: counts above the cutoff are left undiscounted.
  unsigned gt_cutoff = 7;
  // Absolute / Kneser-Ney: overrides the n1/(n1+2*n2) estimate; must lie in
  // (0, 1).
  std::optional<double> fixed_discount;

  void validate() const;
  static SmoothingMethod from_name(const std::string& name);
  std::string name() const;
};

// Log10 probabilities are never -inf; the floor mirrors the ARPA convention.
constexpr double kLog10Floor = -99.0;

struct ModelEntry {
  double log10_prob = kLog10Floor;
  double log10_bow = 0.0;
  bool has_bow = false;
};

struct Prediction {
  double log10_prob = kLog10Floor;
  double prob = 0.0;
  int hit_order = 0;  // n-gram order at which the probability was found
};

struct SequenceScore {
  double total_log10 = 0.0;
  std::vector<int> hit_orders;  // one per scored token
  std::uint64_t oov_count = 0;
  std::uint64_t scored_count = 0;
};

// Back-off n-gram model over log10 probabilities.
class BackoffModel {
 public:
  using EntryMap = std::unordered_map<NGram, ModelEntry, NGramHash>;

  BackoffModel(std::size_t order, std::shared_ptr<const Vocabulary> vocab);

  std::size_t order() const { return order_; }
  const Vocabulary& vocab() const { return *vocab_; }
  std::shared_ptr<const Vocabulary> vocab_ptr() const { return vocab_; }

  EntryMap& entries(std::size_t k);
  const EntryMap& entries(std::size_t k) const;
  const ModelEntry* find(std::span<const TokenId> gram) const;

  // Recursive back-off lookup.  The context may be any length; only its last
  // order-1 tokens participate.
  Prediction conditional(std::span<const TokenId> context, TokenId word) const;

  // String-level convenience: unseen tokens resolve to the unknown symbol.
  Prediction conditional(const std::vector<std::string>& context,
                         const std::string& word) const;

  // Pads with sentence-begin/end, scores every word token and the end symbol.
  // Tokens missing from the vocabulary count as OOV and are skipped; they
  // still appear in the conditioning context as the unknown symbol.
  SequenceScore score_sequence(const SentenceTokens& sentence) const;

 private:
  std::size_t order_;
  std::shared_ptr<const Vocabulary> vocab_;
  std::vector<EntryMap> entries_;
};

// Fixed formulas shared by the estimators and their tests.

// Good-Turing adjusted count r* = (r+1) * n_{r+1} / n_r.
double good_turing_adjusted_count(std::uint64_t r, std::uint64_t n_r,
                                  std::uint64_t n_r_plus_1);

// D = n1 / (n1 + 2*n2), the Ney et al. estimate used by the absolute and
// Kneser-Ney discounts.
double absolute_discount_estimate(std::uint64_t n1, std::uint64_t n2);

// Interpolated Witten-Bell estimate
// P(w|h) = (c(h,w) + T(h) * P_lower(w|h')) / (c(h) + T(h)).
double witten_bell_prob(std::uint64_t count, std::uint64_t context_total,
                        std::uint64_t successor_types, double lower_prob);

// Builds a model of the requested order from the table.  Emits a warning and
// substitutes safe parameters when degenerate statistics break a formula.
BackoffModel estimate(const NGramTable& table, const SmoothingMethod& method,
                      std::size_t order,
                      std::vector<std::string>* warnings = nullptr);

}  // namespace morphlm

#endif  // MORPHLM_SMOOTHING_HPP_
