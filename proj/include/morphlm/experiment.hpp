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

#ifndef MORPHLM_EXPERIMENT_HPP_
#define MORPHLM_EXPERIMENT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "morphlm/eval.hpp"
#include "morphlm/smoothing.hpp"

namespace morphlm {

// Name of the environment variable pointing at the bundled data directory
// (suffix rule files).
extern const char kDataDirEnvVar[];

// End-to-end run configuration; serializable as JSON for --config.
struct ExperimentConfig {
  std::string train_path;
  std::string test_path;
  std::string method = "witten-bell";
  unsigned gt_cutoff = 7;
  std::optional<double> fixed_discount;
  std::size_t order = 3;
  // none | supervised | unsupervised | combined
  std::string mode = "none";
  std::size_t t_stem = 3;
  std::size_t t_suffix = 3;
  std::string rules_path;  // empty: $MORPHLM_DATA/telugu_suffix_rules.tsv
  std::string marker = "+";
  std::string output_dir;         // empty: keep models in memory only
  std::string inject_words_path;  // extra sentences appended to training text

  void validate() const;
  static ExperimentConfig from_json_file(const std::string& path);
  std::string to_json() const;
};

// Falls back to the bundled rule file under the data-dir environment
// variable; throws UsageError when neither source is available.
std::string resolve_rules_path(const ExperimentConfig& config);

struct VariantResult {
  std::string variant;
  CorpusStats train_stats;  // after preprocessing (and injection)
  PerplexityReport report;
};

// Runs the four training-corpus variants (none, supervised, unsupervised,
// combined = unsplit + unsupervised-split concatenation) with one smoothing
// method, evaluating each on the identically preprocessed test corpus.
// When output_dir is set, writes <variant>.arpa and <variant>.json there.
// Estimator warnings are labelled with their variant.
std::vector<VariantResult> run_experiment(
    const ExperimentConfig& config,
    std::vector<std::string>* warnings = nullptr);

// CSV rows for the variant table; WER stays blank (needs a speech decoder).
std::string experiment_csv(const std::vector<VariantResult>& results,
                           std::size_t order);

struct SweepRow {
  double fraction = 0.0;  // percent of test sentences included in training
  PerplexityReport report;
};

// Trains on train + the first fraction% of test sentences and evaluates on
// the full test set, per fraction.  Fractions must lie in [0, 100].
std::vector<SweepRow> run_inclusion_sweep(
    const ExperimentConfig& config, const std::vector<double>& fractions,
    std::vector<std::string>* warnings = nullptr);

std::string sweep_csv(const std::vector<SweepRow>& rows, std::size_t order);

}  // namespace morphlm

#endif  // MORPHLM_EXPERIMENT_HPP_
