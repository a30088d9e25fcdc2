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

#include "morphlm/smoothing.hpp"

#include <algorithm>
#include <cmath>

#include "morphlm/error.hpp"

namespace morphlm {

namespace {

constexpr double kUnseenFloor = 1e-10;  // unigram floor before renormalization
constexpr double kProbFloor = 1e-99;

void warn(std::vector<std::string>* sink, const std::string& msg) {
  if (sink) sink->push_back(msg);
}

}  // namespace

void SmoothingMethod::validate() const {
  if (gt_cutoff < 1) throw UsageError("Good-Turing cutoff must be >= 1");
  if (fixed_discount && (*fixed_discount <= 0.0 || *fixed_discount >= 1.0))
    throw UsageError("fixed discount must lie in (0, 1)");
}

SmoothingMethod SmoothingMethod::from_name(const std::string& name) {
  SmoothingMethod m;
  if (name == "good-turing") m.kind = Smoothing::kGoodTuring;
  else if (name == "linear") m.kind = Smoothing::kLinearDiscount;
  else if (name == "absolute") m.kind = Smoothing::kAbsoluteDiscount;
  else if (name == "witten-bell") m.kind = Smoothing::kWittenBell;
  else if (name == "kneser-ney") m.kind = Smoothing::kKneserNey;
  else throw UsageError("unknown smoothing method: " + name);
  return m;
}

std::string SmoothingMethod::name() const {
  switch (kind) {
    case Smoothing::kGoodTuring: return "good-turing";
    case Smoothing::kLinearDiscount: return "linear";
    case Smoothing::kAbsoluteDiscount: return "absolute";
    case Smoothing::kWittenBell: return "witten-bell";
    case Smoothing::kKneserNey: return "kneser-ney";
  }
  return "unknown";
}

double good_turing_adjusted_count(std::uint64_t r, std::uint64_t n_r,
                                  std::uint64_t n_r_plus_1) {
  if (n_r == 0) throw UsageError("Good-Turing adjustment needs n_r > 0");
  return static_cast<double>(r + 1) * static_cast<double>(n_r_plus_1) /
         static_cast<double>(n_r);
}

double absolute_discount_estimate(std::uint64_t n1, std::uint64_t n2) {
  if (n1 == 0 && n2 == 0) throw UsageError("discount estimate needs n1 or n2");
  return static_cast<double>(n1) / (static_cast<double>(n1) + 2.0 * n2);
}

double witten_bell_prob(std::uint64_t count, std::uint64_t context_total,
                        std::uint64_t successor_types, double lower_prob) {
  const double denom =
      static_cast<double>(context_total) + static_cast<double>(successor_types);
  return (static_cast<double>(count) +
          static_cast<double>(successor_types) * lower_prob) /
         denom;
}

BackoffModel::BackoffModel(std::size_t order,
                           std::shared_ptr<const Vocabulary> vocab)
    : order_(order), vocab_(std::move(vocab)), entries_(order) {
  if (order_ < 1) throw UsageError("model order must be at least 1");
}

BackoffModel::EntryMap& BackoffModel::entries(std::size_t k) {
  if (k < 1 || k > order_)
    throw UsageError("model order " + std::to_string(k) + " out of range");
  return entries_[k - 1];
}

const BackoffModel::EntryMap& BackoffModel::entries(std::size_t k) const {
  if (k < 1 || k > order_)
    throw UsageError("model order " + std::to_string(k) + " out of range");
  return entries_[k - 1];
}

const ModelEntry* BackoffModel::find(std::span<const TokenId> gram) const {
  if (gram.empty() || gram.size() > order_) return nullptr;
  const EntryMap& m = entries_[gram.size() - 1];
  auto it = m.find(NGram(gram.begin(), gram.end()));
  return it == m.end() ? nullptr : &it->second;
}

Prediction BackoffModel::conditional(std::span<const TokenId> context,
                                     TokenId word) const {
  const std::size_t max_len = std::min(context.size(), order_ - 1);
  double acc = 0.0;
  NGram key;
  for (std::size_t len = max_len + 1; len-- > 0;) {
    const std::span<const TokenId> ctx = context.last(len);
    key.assign(ctx.begin(), ctx.end());
    key.push_back(word);
    const EntryMap& m = entries_[len];
    auto it = m.find(key);
    if (it != m.end()) {
      const double lp = acc + it->second.log10_prob;
      return {lp, std::pow(10.0, lp), static_cast<int>(len + 1)};
    }
    if (len > 0) {
      key.pop_back();  // key now holds the context itself
      auto ctx_it = entries_[len - 1].find(key);
      if (ctx_it != entries_[len - 1].end() && ctx_it->second.has_bow)
        acc += ctx_it->second.log10_bow;
    }
  }
  const double lp = acc + kLog10Floor;
  return {lp, std::pow(10.0, lp), 1};
}

Prediction BackoffModel::conditional(const std::vector<std::string>& context,
                                     const std::string& word) const {
  std::vector<TokenId> ids;
  ids.reserve(context.size());
  for (const std::string& t : context) ids.push_back(vocab_->id_or_unknown(t));
  return conditional(ids, vocab_->id_or_unknown(word));
}

SequenceScore BackoffModel::score_sequence(
    const SentenceTokens& sentence) const {
  SequenceScore score;
  std::vector<TokenId> padded;
  std::vector<bool> is_oov;
  padded.reserve(sentence.size() + 2);
  is_oov.reserve(sentence.size() + 1);
  padded.push_back(Vocabulary::kSentenceBeginId);
  for (const std::string& token : sentence) {
    const auto id = vocab_->find(token);
    padded.push_back(id ? *id : Vocabulary::kUnknownId);
    is_oov.push_back(!id.has_value());
  }
  padded.push_back(Vocabulary::kSentenceEndId);
  is_oov.push_back(false);

  for (std::size_t i = 1; i < padded.size(); ++i) {
    if (is_oov[i - 1]) {
      ++score.oov_count;
      continue;
    }
    const Prediction p =
        conditional(std::span<const TokenId>(padded).first(i), padded[i]);
    score.total_log10 += p.log10_prob;
    score.hit_orders.push_back(p.hit_order);
    ++score.scored_count;
  }
  return score;
}

namespace {

// Per-order view of the statistics a method discounts: the event n-grams
// (those not ending in the sentence-begin symbol, which is context-only)
// with their effective counts, per-context sums over events, and the
// count-of-counts histogram of the effective counts.
struct OrderView {
  struct ContextStat {
    std::uint64_t total = 0;
    std::uint64_t types = 0;
  };
  std::vector<std::pair<NGram, std::uint64_t>> events;  // sorted by gram
  std::unordered_map<NGram, ContextStat, NGramHash> contexts;
  std::map<std::uint64_t, std::uint64_t> cofc;

  const ContextStat& context(const NGram& ctx) const {
    static const ContextStat kZero;
    auto it = contexts.find(ctx);
    return it == contexts.end() ? kZero : it->second;
  }
};

class Estimator {
 public:
  Estimator(const NGramTable& table, const SmoothingMethod& method,
            std::size_t order, std::vector<std::string>* warnings)
      : table_(table),
        method_(method),
        order_(order),
        warnings_(warnings),
        model_(order, table.vocab_ptr()) {}

  BackoffModel run() {
    total_mass_.resize(order_);
    build_views();
    prepare_discounts();
    estimate_unigrams();
    for (std::size_t k = 2; k <= order_; ++k) estimate_order(k);
    // Bottom-up so that the rare residue rescale at order k+1 lands before
    // that order's own back-off pass reads the values.
    for (std::size_t k = 1; k < order_; ++k) compute_backoffs(k);
    return std::move(model_);
  }

 private:
  bool kneser_ney_lower(std::size_t k) const {
    return method_.kind == Smoothing::kKneserNey && k < order_;
  }

  void build_views() {
    views_.resize(order_ + 1);
    for (std::size_t k = 1; k <= order_; ++k) {
      OrderView& view = views_[k];
      const bool use_continuation = kneser_ney_lower(k);
      for (const auto& [gram, raw] : table_.counts(k)) {
        if (gram.back() == Vocabulary::kSentenceBeginId) continue;
        std::uint64_t c = raw;
        if (use_continuation && gram.front() != Vocabulary::kSentenceBeginId)
          c = table_.continuation_count(gram);
        view.events.emplace_back(gram, c);
        NGram ctx(gram.begin(), gram.end() - 1);
        auto& stat = view.contexts[ctx];
        stat.total += c;
        stat.types += 1;
        ++view.cofc[c];
      }
      std::sort(view.events.begin(), view.events.end());
    }
  }

  std::uint64_t cofc(std::size_t k, std::uint64_t r) const {
    const auto& m = views_[k].cofc;
    auto it = m.find(r);
    return it == m.end() ? 0 : it->second;
  }

  void prepare_discounts() {
    gt_discount_.assign(order_ + 1, {});
    lambda_.assign(order_ + 1, 0.0);
    abs_discount_.assign(order_ + 1, 0.5);
    for (std::size_t k = 1; k <= order_; ++k) {
      switch (method_.kind) {
        case Smoothing::kGoodTuring:
          gt_discount_[k] = katz_discounts(k);
          break;
        case Smoothing::kLinearDiscount: {
          std::uint64_t total = 0;
          for (const auto& [r, n] : views_[k].cofc) total += r * n;
          double lambda =
              total == 0 ? 0.0 : static_cast<double>(cofc(k, 1)) / total;
          if (lambda >= 1.0) {
            warn(warnings_, "order " + std::to_string(k) +
                                ": all n-grams are singletons; substituting "
                                "linear discount 0.5");
            lambda = 0.5;
          }
          lambda_[k] = lambda;
          break;
        }
        case Smoothing::kAbsoluteDiscount:
        case Smoothing::kKneserNey: {
          if (method_.fixed_discount) {
            abs_discount_[k] = *method_.fixed_discount;
            break;
          }
          const std::uint64_t n1 = cofc(k, 1);
          const std::uint64_t n2 = cofc(k, 2);
          if (n1 == 0 || n2 == 0) {
            warn(warnings_, "order " + std::to_string(k) +
                                ": degenerate count-of-counts (n1=" +
                                std::to_string(n1) + ", n2=" +
                                std::to_string(n2) +
                                "); substituting discount 0.5");
            abs_discount_[k] = 0.5;
          } else {
            abs_discount_[k] = absolute_discount_estimate(n1, n2);
          }
          break;
        }
        case Smoothing::kWittenBell:
          break;
      }
    }
  }

  // Katz-normalized Good-Turing discount ratios d_r for r in [1, cutoff]:
  // d_r = (r*/r - A) / (1 - A) with A = (cutoff+1) n_{cutoff+1} / n_1, so
  // that discounting fades out above the cutoff.  Unusable statistics leave
  // d_r = 1 for the affected r.
  std::vector<double> katz_discounts(std::size_t k) {
    const unsigned cutoff = method_.gt_cutoff;
    std::vector<double> d(cutoff + 1, 1.0);
    const std::uint64_t n1 = cofc(k, 1);
    if (n1 == 0) {
      warn(warnings_, "order " + std::to_string(k) +
                          ": no singleton count; Good-Turing discounting "
                          "disabled for this order");
      return d;
    }
    const double a = static_cast<double>(cutoff + 1) *
                     static_cast<double>(cofc(k, cutoff + 1)) /
                     static_cast<double>(n1);
    if (a >= 1.0) {
      warn(warnings_, "order " + std::to_string(k) +
                          ": degenerate count-of-counts histogram; "
                          "Good-Turing discounting disabled for this order");
      return d;
    }
    for (std::uint64_t r = 1; r <= cutoff; ++r) {
      const std::uint64_t n_r = cofc(k, r);
      const std::uint64_t n_r1 = cofc(k, r + 1);
      if (n_r == 0 || n_r1 == 0) {
        if (n_r != 0)
          warn(warnings_, "order " + std::to_string(k) + ": n_" +
                              std::to_string(r + 1) +
                              " = 0; skipping Good-Turing adjustment for "
                              "count " +
                              std::to_string(r));
        continue;
      }
      const double r_star = good_turing_adjusted_count(r, n_r, n_r1);
      const double dr = (r_star / static_cast<double>(r) - a) / (1.0 - a);
      if (dr <= 0.0 || dr > 1.0) {
        warn(warnings_, "order " + std::to_string(k) +
                            ": Good-Turing discount for count " +
                            std::to_string(r) +
                            " out of range; leaving count undiscounted");
        continue;
      }
      d[r] = dr;
    }
    return d;
  }

  double discounted_mass(std::size_t k, std::uint64_t count,
                         std::uint64_t total) const {
    const double r = static_cast<double>(count);
    switch (method_.kind) {
      case Smoothing::kGoodTuring: {
        const auto& d = gt_discount_[k];
        const double ratio = count < d.size() ? d[count] : 1.0;
        return ratio * r / static_cast<double>(total);
      }
      case Smoothing::kLinearDiscount:
        return (1.0 - lambda_[k]) * r / static_cast<double>(total);
      case Smoothing::kAbsoluteDiscount:
        return (r - abs_discount_[k]) / static_cast<double>(total);
      default:
        throw UsageError("discounted_mass applies to back-off methods only");
    }
  }

  // The lower-order probability used for interpolation.  The (k-1)-gram
  // suffix of a stored k-gram is itself observed, so this is a direct hit.
  double lower_prob(const NGram& gram) const {
    const std::span<const TokenId> g(gram);
    return model_.conditional(g.subspan(1, g.size() - 2), gram.back()).prob;
  }

  void estimate_unigrams() {
    const Vocabulary& vocab = table_.vocab();
    const OrderView& view = views_[1];
    const auto& root = view.context(NGram{});
    const std::uint64_t total = root.total;
    const std::uint64_t types = root.types;
    if (total == 0) throw DataError("n-gram table has no events");
    const double uniform = 1.0 / static_cast<double>(vocab.size() - 1);
    const double d = abs_discount_[1];
    const double kn_lambda =
        d * static_cast<double>(types) / static_cast<double>(total);

    std::vector<double> probs(vocab.size(), 0.0);
    std::vector<TokenId> zero_prob_ids;
    double sum = 0.0;
    for (TokenId id = 0; id < vocab.size(); ++id) {
      if (id == Vocabulary::kSentenceBeginId) continue;
      NGram gram{id};
      std::uint64_t c = 0;
      auto it = table_.counts(1).find(gram);
      if (it != table_.counts(1).end())
        c = kneser_ney_lower(1) ? table_.continuation_count(gram) : it->second;
      double p = 0.0;
      switch (method_.kind) {
        case Smoothing::kGoodTuring:
        case Smoothing::kLinearDiscount:
        case Smoothing::kAbsoluteDiscount:
          p = c > 0 ? discounted_mass(1, c, total) : 0.0;
          break;
        case Smoothing::kWittenBell:
          p = witten_bell_prob(c, total, types, uniform);
          break;
        case Smoothing::kKneserNey:
          p = (c > 0 ? (static_cast<double>(c) - d) /
                           static_cast<double>(total)
                     : 0.0) +
              kn_lambda * uniform;
          break;
      }
      probs[id] = p;
      if (p <= 0.0) zero_prob_ids.push_back(id);
      sum += p;
    }

    // Unseen mass: distributed over zero-probability entries (normally just
    // the unknown symbol), floored, then renormalized to an exact sum of 1.
    const double leftover = 1.0 - sum;
    if (zero_prob_ids.empty()) {
      probs[Vocabulary::kUnknownId] += leftover;
      probs[Vocabulary::kUnknownId] =
          std::max(probs[Vocabulary::kUnknownId], kUnseenFloor);
    } else {
      const double share =
          std::max(leftover, 0.0) / static_cast<double>(zero_prob_ids.size());
      for (TokenId id : zero_prob_ids) probs[id] = std::max(share, kUnseenFloor);
    }
    double grand = 0.0;
    for (TokenId id = 0; id < vocab.size(); ++id)
      if (id != Vocabulary::kSentenceBeginId) grand += probs[id];

    BackoffModel::EntryMap& unigrams = model_.entries(1);
    long double stored_mass = 0.0L;
    for (TokenId id = 0; id < vocab.size(); ++id) {
      ModelEntry entry;
      if (id == Vocabulary::kSentenceBeginId) {
        entry.log10_prob = kLog10Floor;
      } else {
        entry.log10_prob =
            std::log10(std::max(probs[id] / grand, kProbFloor));
      }
      stored_mass += std::pow(10.0, entry.log10_prob);
      unigrams.emplace(NGram{id}, entry);
    }
    total_mass_[0][NGram{}] = stored_mass;
  }

  void estimate_order(std::size_t k) {
    const OrderView& view = views_[k];
    BackoffModel::EntryMap& out = model_.entries(k);
    const double d = abs_discount_[k];
    for (const auto& [gram, c] : view.events) {
      const NGram ctx(gram.begin(), gram.end() - 1);
      const auto& stat = view.context(ctx);
      double p = 0.0;
      switch (method_.kind) {
        case Smoothing::kGoodTuring:
        case Smoothing::kLinearDiscount:
        case Smoothing::kAbsoluteDiscount:
          p = discounted_mass(k, c, stat.total);
          break;
        case Smoothing::kWittenBell:
          p = witten_bell_prob(c, stat.total, stat.types, lower_prob(gram));
          break;
        case Smoothing::kKneserNey: {
          const double lambda = d * static_cast<double>(stat.types) /
                                static_cast<double>(stat.total);
          p = (static_cast<double>(c) - d) / static_cast<double>(stat.total) +
              lambda * lower_prob(gram);
          break;
        }
      }
      ModelEntry entry;
      entry.log10_prob = std::log10(std::clamp(p, kProbFloor, 1.0));
      out.emplace(gram, entry);
    }
  }

  // bow(h) = (1 - sum of stored P(w|h)) / (T_lower - sum of stored
  // P(w|h')), where T_lower is the actual total mass of the lower-order
  // distribution.  Tracking T_lower instead of assuming an exact 1 keeps the
  // amplification of representation noise by 1/denominator in check.
  // Contexts referenced by stored higher-order entries but not stored
  // themselves (the sentence-begin unigram) get a floor probability entry.
  void compute_backoffs(std::size_t k) {
    std::unordered_map<NGram, std::vector<const NGram*>, NGramHash> by_context;
    for (const auto& [gram, entry] : model_.entries(k + 1)) {
      NGram ctx(gram.begin(), gram.end() - 1);
      by_context[ctx].push_back(&gram);
    }
    std::vector<const NGram*> contexts;
    contexts.reserve(by_context.size());
    for (auto& [ctx, grams] : by_context) {
      std::sort(grams.begin(), grams.end(),
                [](const NGram* a, const NGram* b) { return *a < *b; });
      contexts.push_back(&ctx);
    }
    std::sort(contexts.begin(), contexts.end(),
              [](const NGram* a, const NGram* b) { return *a < *b; });

    BackoffModel::EntryMap& own = model_.entries(k);
    BackoffModel::EntryMap& upper = model_.entries(k + 1);
    for (const NGram* ctx_ptr : contexts) {
      const NGram& ctx = *ctx_ptr;
      auto [slot, inserted] = own.emplace(ctx, ModelEntry{});
      if (inserted) slot->second.log10_prob = kLog10Floor;

      long double stored = 0.0L;
      long double lower = 0.0L;
      const std::span<const TokenId> shortened =
          std::span<const TokenId>(ctx).subspan(1);
      std::vector<bool> is_continuation(table_.vocab().size(), false);
      for (const NGram* gram : by_context[ctx]) {
        stored += std::pow(10.0, upper.at(*gram).log10_prob);
        lower += model_.conditional(shortened, gram->back()).prob;
        is_continuation[gram->back()] = true;
      }
      const long double t_lower =
          k == 1 ? total_mass_[0].at(NGram{})
                 : total_mass_[k - 1].at(NGram(ctx.begin() + 1, ctx.end()));
      const long double num =
          std::max(1.0L - stored, static_cast<long double>(0.0));
      const long double den = t_lower - lower;
      long double context_total = stored;
      double log10_bow = kLog10Floor;

      if (den >= 1e-6L) {
        const double bow = static_cast<double>(num / den);
        log10_bow =
            bow <= 0.0 ? kLog10Floor : std::max(std::log10(bow), kLog10Floor);
        context_total += std::pow(10.0, log10_bow) * den;
      } else {
        // Nearly all lower-order mass is already covered by stored
        // continuations; a quotient of near-zeros would blow up rounding
        // noise.  Spell out the few unseen events explicitly instead and
        // shut the back-off path off.
        std::vector<std::pair<TokenId, double>> unseen;
        long double unseen_mass = 0.0L;
        for (TokenId id = 0; id < is_continuation.size(); ++id) {
          if (id == Vocabulary::kSentenceBeginId || is_continuation[id])
            continue;
          const double p = model_.conditional(shortened, id).prob;
          unseen.push_back({id, p});
          unseen_mass += p;
        }
        if (num > 0.0L && unseen_mass > 0.0L) {
          for (const auto& [id, p] : unseen) {
            NGram gram = ctx;
            gram.push_back(id);
            ModelEntry entry;
            entry.log10_prob = std::log10(std::clamp(
                static_cast<double>(num) * p / static_cast<double>(unseen_mass),
                kProbFloor, 1.0));
            auto [it, fresh] = upper.emplace(std::move(gram), entry);
            if (!fresh) it->second.log10_prob = entry.log10_prob;
            context_total += std::pow(10.0, entry.log10_prob);
          }
        } else if (num > 0.0L && stored > 0.0L) {
          // No unseen event at all: renormalize the stored continuations.
          const double scale = std::log10(static_cast<double>(
              (stored + num) / stored));
          context_total = 0.0L;
          for (const NGram* gram : by_context[ctx]) {
            upper.at(*gram).log10_prob += scale;
            context_total += std::pow(10.0, upper.at(*gram).log10_prob);
          }
        }
      }
      slot->second.has_bow = true;
      slot->second.log10_bow = log10_bow;
      total_mass_[k][ctx] = context_total;
    }
  }

  const NGramTable& table_;
  SmoothingMethod method_;
  std::size_t order_;
  std::vector<std::string>* warnings_;
  BackoffModel model_;
  std::vector<OrderView> views_;
  std::vector<std::vector<double>> gt_discount_;
  std::vector<double> lambda_;
  std::vector<double> abs_discount_;
  // [len] -> actual probability mass of the distribution conditioned on each
  // stored context of that length ([0] holds the unigram total).
  std::vector<std::unordered_map<NGram, long double, NGramHash>> total_mass_;
};

}  // namespace

BackoffModel estimate(const NGramTable& table, const SmoothingMethod& method,
                      std::size_t order, std::vector<std::string>* warnings) {
  method.validate();
  if (order < 1 || order > table.order())
    throw UsageError("requested order " + std::to_string(order) +
                     " does not match a table of order " +
                     std::to_string(table.order()));
  if (table.counts(1).empty()) throw DataError("n-gram table is empty");
  return Estimator(table, method, order, warnings).run();
}

}  // namespace morphlm
