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

#include "morphlm/experiment.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "morphlm/arpa.hpp"
#include "morphlm/error.hpp"
#include "morphlm/postproc.hpp"
#include "morphlm/stem_rules.hpp"
#include "morphlm/stem_unsup.hpp"

namespace morphlm {

const char kDataDirEnvVar[] = "MORPHLM_DATA";

namespace {

using nlohmann::json;

std::string format_percent(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return buf;
}

SmoothingMethod method_from_config(const ExperimentConfig& config) {
  SmoothingMethod method = SmoothingMethod::from_name(config.method);
  method.gt_cutoff = config.gt_cutoff;
  method.fixed_discount = config.fixed_discount;
  method.validate();
  return method;
}

BackoffModel train_model(const Corpus& corpus, const SmoothingMethod& method,
                         std::size_t order, const std::string& label,
                         std::vector<std::string>* warnings) {
  auto [vocab, stats] = build_vocabulary(corpus);
  auto shared = std::make_shared<Vocabulary>(std::move(vocab));
  const NGramTable table = count_ngrams(corpus, order, shared);
  std::vector<std::string> local;
  BackoffModel model = estimate(table, method, order, &local);
  if (warnings)
    for (const std::string& w : local) warnings->push_back(label + ": " + w);
  return model;
}

void append_injected(Corpus& train, const std::string& path) {
  if (path.empty()) return;
  const Corpus injected = load_corpus_file(path);
  train.insert(train.end(), injected.begin(), injected.end());
}

}  // namespace

void ExperimentConfig::validate() const {
  if (train_path.empty()) throw UsageError("training corpus path is required");
  if (order < 1) throw UsageError("order must be at least 1");
  if (mode != "none" && mode != "supervised" && mode != "unsupervised" &&
      mode != "combined")
    throw UsageError("unknown stemming mode: " + mode);
  if (t_stem < 1 || t_suffix < 1)
    throw UsageError("stem and suffix thresholds must be at least 1");
  method_from_config(*this);
  if (!std::ifstream(train_path))
    throw UsageError("training corpus not readable: " + train_path);
  if (!test_path.empty() && !std::ifstream(test_path))
    throw UsageError("test corpus not readable: " + test_path);
  if (!inject_words_path.empty() && !std::ifstream(inject_words_path))
    throw UsageError("inject-words file not readable: " + inject_words_path);
}

std::string ExperimentConfig::to_json() const {
  json j = {{"train", train_path},
            {"test", test_path},
            {"method", method},
            {"gt_cutoff", gt_cutoff},
            {"order", order},
            {"mode", mode},
            {"t_stem", t_stem},
            {"t_suffix", t_suffix},
            {"rules", rules_path},
            {"marker", marker},
            {"output_dir", output_dir},
            {"inject_words", inject_words_path}};
  if (fixed_discount) j["discount"] = *fixed_discount;
  return j.dump(2);
}

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  ExperimentConfig config;
  try {
    const json j = json::parse(in);
    config.train_path = j.value("train", "");
    config.test_path = j.value("test", "");
    config.method = j.value("method", config.method);
    config.gt_cutoff = j.value("gt_cutoff", config.gt_cutoff);
    if (j.contains("discount"))
      config.fixed_discount = j.at("discount").get<double>();
    config.order = j.value("order", config.order);
    config.mode = j.value("mode", config.mode);
    config.t_stem = j.value("t_stem", config.t_stem);
    config.t_suffix = j.value("t_suffix", config.t_suffix);
    config.rules_path = j.value("rules", "");
    config.marker = j.value("marker", config.marker);
    config.output_dir = j.value("output_dir", "");
    config.inject_words_path = j.value("inject_words", "");
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return config;
}

std::string resolve_rules_path(const ExperimentConfig& config) {
  if (!config.rules_path.empty()) return config.rules_path;
  if (const char* dir = std::getenv(kDataDirEnvVar)) {
    const std::string candidate =
        std::string(dir) + "/telugu_suffix_rules.tsv";
    if (std::ifstream(candidate)) return candidate;
  }
  throw UsageError(
      "no rule file: pass --rules or set " + std::string(kDataDirEnvVar) +
      " to a directory containing telugu_suffix_rules.tsv");
}

std::vector<VariantResult> run_experiment(const ExperimentConfig& config,
                                          std::vector<std::string>* warnings) {
  config.validate();
  if (config.test_path.empty())
    throw UsageError("experiment requires a test corpus");
  const SmoothingMethod method = method_from_config(config);
  const Corpus train = load_corpus_file(config.train_path);
  const Corpus test = load_corpus_file(config.test_path);

  const SuffixRuleSet rules =
      load_rules_file(resolve_rules_path(config), 3, config.marker);
  const SegmentationGraph pruned = prune_graph(
      build_segmentation_graph(train),
      StemThresholds{config.t_stem, config.t_suffix});

  const Corpus train_sup = split_corpus_supervised(train, rules);
  const Corpus test_sup = split_corpus_supervised(test, rules);
  const Corpus train_unsup = segment_corpus(train, pruned, config.marker);
  const Corpus test_unsup = segment_corpus(test, pruned, config.marker);
  Corpus train_combined = train;
  train_combined.insert(train_combined.end(), train_unsup.begin(),
                        train_unsup.end());

  struct Variant {
    std::string name;
    const Corpus* train;
    const Corpus* test;
  };
  const Variant variants[] = {{"none", &train, &test},
                              {"supervised", &train_sup, &test_sup},
                              {"unsupervised", &train_unsup, &test_unsup},
                              {"combined", &train_combined, &test_unsup}};

  std::vector<VariantResult> results;
  for (const Variant& v : variants) {
    Corpus training = *v.train;
    append_injected(training, config.inject_words_path);
    const BackoffModel model =
        train_model(training, method, config.order, v.name, warnings);
    VariantResult result;
    result.variant = v.name;
    result.train_stats = corpus_stats(training);
    result.report = evaluate_perplexity(model, *v.test);
    if (!config.output_dir.empty()) {
      std::filesystem::create_directories(config.output_dir);
      write_arpa_file(model, config.output_dir + "/" + v.name + ".arpa");
      std::ofstream json_out(config.output_dir + "/" + v.name + ".json");
      if (!json_out) throw IoError("cannot write report in " + config.output_dir);
      json_out << result.report.to_json() << '\n';
    }
    results.push_back(std::move(result));
  }
  return results;
}

std::string experiment_csv(const std::vector<VariantResult>& results,
                           std::size_t order) {
  std::ostringstream out;
  out << "variant,train_unique_words,train_tokens,perplexity,oov_rate_percent";
  for (std::size_t k = order; k >= 1; --k) out << ",hit" << k << "_percent";
  out << ",wer_percent\n";
  for (const VariantResult& r : results) {
    out << r.variant << ',' << r.train_stats.unique_word_count << ','
        << r.train_stats.token_count << ','
        << format_percent(r.report.perplexity) << ','
        << format_percent(r.report.oov_rate);
    for (std::size_t k = order; k >= 1; --k) {
      auto it = r.report.hits_per_order.find(static_cast<int>(k));
      out << ','
          << format_percent(it == r.report.hits_per_order.end()
                                ? 0.0
                                : it->second.percent);
    }
    out << ",\n";  // WER column intentionally blank
  }
  out << "# wer_percent is blank: decoding requires an external ASR system.\n";
  return out.str();
}

std::vector<SweepRow> run_inclusion_sweep(const ExperimentConfig& config,
                                          const std::vector<double>& fractions,
                                          std::vector<std::string>* warnings) {
  config.validate();
  if (config.test_path.empty())
    throw UsageError("inclusion sweep requires a test corpus");
  for (double f : fractions)
    if (f < 0.0 || f > 100.0)
      throw UsageError("inclusion fraction must lie in [0, 100]");
  const SmoothingMethod method = method_from_config(config);

  Corpus train = load_corpus_file(config.train_path);
  Corpus test = load_corpus_file(config.test_path);
  if (config.mode == "supervised") {
    const SuffixRuleSet rules =
        load_rules_file(resolve_rules_path(config), 3, config.marker);
    train = split_corpus_supervised(train, rules);
    test = split_corpus_supervised(test, rules);
  } else if (config.mode == "unsupervised" || config.mode == "combined") {
    const SegmentationGraph pruned = prune_graph(
        build_segmentation_graph(train),
        StemThresholds{config.t_stem, config.t_suffix});
    Corpus segmented = segment_corpus(train, pruned, config.marker);
    test = segment_corpus(test, pruned, config.marker);
    if (config.mode == "combined") {
      train.insert(train.end(), segmented.begin(), segmented.end());
    } else {
      train = std::move(segmented);
    }
  }
  append_injected(train, config.inject_words_path);

  std::vector<SweepRow> rows;
  for (double f : fractions) {
    const std::size_t take = static_cast<std::size_t>(
        static_cast<double>(test.size()) * f / 100.0);
    Corpus training = train;
    training.insert(training.end(), test.begin(),
                    test.begin() + static_cast<std::ptrdiff_t>(take));
    const BackoffModel model =
        train_model(training, method, config.order,
                    "fraction " + std::to_string(f), warnings);
    SweepRow row;
    row.fraction = f;
    row.report = evaluate_perplexity(model, test);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, std::size_t order) {
  std::ostringstream out;
  out << "fraction_percent,perplexity,oov_count,oov_rate_percent";
  for (std::size_t k = order; k >= 1; --k) out << ",hit" << k << "_percent";
  out << '\n';
  for (const SweepRow& row : rows) {
    out << format_percent(row.fraction) << ','
        << format_percent(row.report.perplexity) << ',' << row.report.oov_count
        << ',' << format_percent(row.report.oov_rate);
    for (std::size_t k = order; k >= 1; --k) {
      auto it = row.report.hits_per_order.find(static_cast<int>(k));
      out << ','
          << format_percent(it == row.report.hits_per_order.end()
                                ? 0.0
                                : it->second.percent);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace morphlm
