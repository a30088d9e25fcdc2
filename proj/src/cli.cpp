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

#include "morphlm/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "morphlm/arpa.hpp"
#include "morphlm/corpus.hpp"
#include "morphlm/counts.hpp"
#include "morphlm/error.hpp"
#include "morphlm/eval.hpp"
#include "morphlm/experiment.hpp"
#include "morphlm/postproc.hpp"
#include "morphlm/smoothing.hpp"
#include "morphlm/stem_rules.hpp"
#include "morphlm/stem_unsup.hpp"

namespace morphlm {

namespace {

using nlohmann::json;

// Writes either to a file or to the fallback stream.
void emit(const std::string& text, const std::string& path,
          std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    if (!text.empty() && text.back() != '\n') fallback << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
  if (!out) throw IoError("write failure: " + path);
}

void print_warnings(const std::vector<std::string>& warnings,
                    std::ostream& err) {
  for (const std::string& w : warnings) err << "warning: " << w << '\n';
}

struct CliOptions {
  // Shared across subcommands; each subcommand binds only what it uses.
  std::string input;
  std::string second_input;
  std::string output;
  std::string model_path;
  std::string rules_path;
  std::string stems_out;
  std::string suffixes_out;
  std::string graph_corpus;
  std::string config_path;
  std::string inject_words;
  std::string marker = "+";
  std::string method = "witten-bell";
  std::string mode = "none";
  std::string outdir;
  std::vector<double> fractions;
  std::size_t order = 3;
  std::size_t min_stem = 3;
  std::size_t t_stem = 3;
  std::size_t t_suffix = 3;
  unsigned gt_cutoff = 7;
  double discount = 0.0;
  bool has_discount = false;
};

SmoothingMethod make_method(const CliOptions& opt) {
  SmoothingMethod method = SmoothingMethod::from_name(opt.method);
  method.gt_cutoff = opt.gt_cutoff;
  if (opt.has_discount) method.fixed_discount = opt.discount;
  method.validate();
  return method;
}

// Config-file values survive unless the corresponding flag was given.
ExperimentConfig make_config(const CliOptions& opt, const CLI::App* cmd) {
  ExperimentConfig config;
  if (!opt.config_path.empty())
    config = ExperimentConfig::from_json_file(opt.config_path);
  auto given = [cmd](const std::string& flag) { return cmd->count(flag) > 0; };
  if (!opt.input.empty()) config.train_path = opt.input;
  if (!opt.second_input.empty()) config.test_path = opt.second_input;
  if (given("--method")) config.method = opt.method;
  if (given("--gt-cutoff")) config.gt_cutoff = opt.gt_cutoff;
  if (opt.has_discount) config.fixed_discount = opt.discount;
  if (given("--order")) config.order = opt.order;
  if (cmd->get_option_no_throw("--mode") && given("--mode"))
    config.mode = opt.mode;
  if (given("--t-stem")) config.t_stem = opt.t_stem;
  if (given("--t-suffix")) config.t_suffix = opt.t_suffix;
  if (!opt.rules_path.empty()) config.rules_path = opt.rules_path;
  if (given("--marker")) config.marker = opt.marker;
  if (!opt.outdir.empty()) config.output_dir = opt.outdir;
  if (!opt.inject_words.empty()) config.inject_words_path = opt.inject_words;
  return config;
}

int cmd_vocab(const CliOptions& opt, std::ostream& out) {
  const Corpus corpus = load_corpus_file(opt.input);
  auto [vocab, stats] = build_vocabulary(corpus);
  const json j = {{"sentence_count", stats.sentence_count},
                  {"token_count", stats.token_count},
                  {"unique_word_count", stats.unique_word_count}};
  emit(j.dump(2), opt.output, out);
  return 0;
}

int cmd_count(const CliOptions& opt, std::ostream& out) {
  const Corpus corpus = load_corpus_file(opt.input);
  auto [vocab, stats] = build_vocabulary(corpus);
  auto shared = std::make_shared<Vocabulary>(std::move(vocab));
  const NGramTable table = count_ngrams(corpus, opt.order, shared);
  std::ostringstream dump;
  dump_counts(table, dump);
  emit(dump.str(), opt.output, out);
  return 0;
}

int cmd_train(const CliOptions& opt, std::ostream& out, std::ostream& err) {
  Corpus corpus = load_corpus_file(opt.input);
  if (!opt.inject_words.empty()) {
    const Corpus injected = load_corpus_file(opt.inject_words);
    corpus.insert(corpus.end(), injected.begin(), injected.end());
  }
  auto [vocab, stats] = build_vocabulary(corpus);
  auto shared = std::make_shared<Vocabulary>(std::move(vocab));
  const NGramTable table = count_ngrams(corpus, opt.order, shared);
  std::vector<std::string> warnings;
  const BackoffModel model =
      estimate(table, make_method(opt), opt.order, &warnings);
  print_warnings(warnings, err);
  if (opt.output.empty()) {
    std::ostringstream text;
    write_arpa(model, text);
    out << text.str();
  } else {
    write_arpa_file(model, opt.output);
  }
  return 0;
}

int cmd_ppl(const CliOptions& opt, std::ostream& out) {
  const BackoffModel model = read_arpa_file(opt.model_path);
  const Corpus test = load_corpus_file(opt.input);
  const PerplexityReport report = evaluate_perplexity(model, test);
  emit(report.to_json(), opt.output, out);
  return 0;
}

int cmd_stem_rules(const CliOptions& opt, std::ostream& out) {
  ExperimentConfig config;
  config.rules_path = opt.rules_path;
  const SuffixRuleSet rules =
      load_rules_file(resolve_rules_path(config), opt.min_stem, opt.marker);
  const Corpus corpus = load_corpus_file(opt.input);
  SupervisedSplitReport report;
  const Corpus split = split_corpus_supervised(corpus, rules, &report);
  save_corpus_file(split, opt.output);
  const json j = {{"rule_count", rules.rules().size()},
                  {"split_word_types", report.split_word_types},
                  {"split_token_count", report.split_token_count},
                  {"unique_before", corpus_stats(corpus).unique_word_count},
                  {"unique_after", corpus_stats(split).unique_word_count}};
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_stem_learn(const CliOptions& opt, std::ostream& out) {
  const Corpus corpus = load_corpus_file(opt.input);
  const SegmentationGraph graph = build_segmentation_graph(corpus);
  const std::size_t prefixes_before = graph.prefixes().size();
  const std::size_t suffixes_before = graph.suffixes().size();
  const std::size_t edges_before = graph.edge_count();
  const SegmentationGraph pruned =
      prune_graph(graph, StemThresholds{opt.t_stem, opt.t_suffix});
  if (!opt.stems_out.empty()) {
    std::ofstream f(opt.stems_out, std::ios::binary);
    if (!f) throw IoError("cannot open output file: " + opt.stems_out);
    export_string_set(pruned.sorted_prefixes(), f);
  }
  if (!opt.suffixes_out.empty()) {
    std::ofstream f(opt.suffixes_out, std::ios::binary);
    if (!f) throw IoError("cannot open output file: " + opt.suffixes_out);
    export_string_set(pruned.sorted_suffixes(), f);
  }
  const json j = {{"prefixes_before", prefixes_before},
                  {"suffixes_before", suffixes_before},
                  {"edges_before", edges_before},
                  {"surviving_stems", pruned.prefixes().size()},
                  {"surviving_suffixes", pruned.suffixes().size()},
                  {"surviving_edges", pruned.edge_count()}};
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_stem_apply(const CliOptions& opt, std::ostream& out) {
  const Corpus corpus = load_corpus_file(opt.input);
  const Corpus graph_source = opt.graph_corpus.empty()
                                  ? corpus
                                  : load_corpus_file(opt.graph_corpus);
  const SegmentationGraph pruned =
      prune_graph(build_segmentation_graph(graph_source),
                  StemThresholds{opt.t_stem, opt.t_suffix});
  SegmentationReport report;
  const Corpus segmented = segment_corpus(corpus, pruned, opt.marker, &report);
  save_corpus_file(segmented, opt.output);
  const json j = {{"unique_before", report.unique_before},
                  {"unique_after", report.unique_after},
                  {"split_word_types", report.split_word_types}};
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_rejoin(const CliOptions& opt, std::ostream& out) {
  RejoinConfig config;
  config.marker = opt.marker;
  const Corpus corpus = load_corpus_file(opt.input);
  std::uint64_t orphans = 0;
  const Corpus joined = rejoin_corpus(corpus, config, &orphans);
  save_corpus_file(joined, opt.output);
  const json j = {{"orphan_markers", orphans}};
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_wer(const CliOptions& opt, std::ostream& out) {
  const Corpus reference = load_corpus_file(opt.input);
  const Corpus hypothesis = load_corpus_file(opt.second_input);
  const WerReport report = corpus_wer(reference, hypothesis);
  emit(report.to_json(), opt.output, out);
  return 0;
}

int cmd_experiment(const CliOptions& opt, const CLI::App* cmd,
                   std::ostream& out, std::ostream& err) {
  const ExperimentConfig config = make_config(opt, cmd);
  std::vector<std::string> warnings;
  const std::vector<VariantResult> results = run_experiment(config, &warnings);
  print_warnings(warnings, err);
  emit(experiment_csv(results, config.order), opt.output, out);
  return 0;
}

int cmd_sweep(const CliOptions& opt, const CLI::App* cmd, std::ostream& out,
              std::ostream& err) {
  const ExperimentConfig config = make_config(opt, cmd);
  std::vector<double> fractions = opt.fractions;
  if (fractions.empty()) fractions = {0, 20, 40, 60, 80, 100};
  std::vector<std::string> warnings;
  const std::vector<SweepRow> rows =
      run_inclusion_sweep(config, fractions, &warnings);
  print_warnings(warnings, err);
  emit(sweep_csv(rows, config.order), opt.output, out);
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"back-off n-gram language modeling with stemming-based "
               "vocabulary reduction"};
  app.require_subcommand(1);
  CliOptions opt;

  const std::set<std::string> methods = {"good-turing", "linear", "absolute",
                                         "witten-bell", "kneser-ney"};
  const std::set<std::string> modes = {"none", "supervised", "unsupervised",
                                       "combined"};

  auto add_method_flags = [&](CLI::App* cmd) {
    cmd->add_option("--method", opt.method, "smoothing method")
        ->check(CLI::IsMember(methods));
    cmd->add_option("--order", opt.order, "n-gram order")->check(CLI::Range(1, 9));
    cmd->add_option("--gt-cutoff", opt.gt_cutoff,
                    "Good-Turing count cutoff (counts above are kept)");
    cmd->add_option_function<double>(
           "--discount",
           [&opt](double d) {
             opt.discount = d;
             opt.has_discount = true;
           },
           "fixed discount for absolute/kneser-ney");
  };

  CLI::App* vocab = app.add_subcommand("vocab", "corpus statistics as JSON");
  vocab->add_option("input", opt.input, "corpus file")->required();
  vocab->add_option("-o,--output", opt.output, "output file (default stdout)");

  CLI::App* count = app.add_subcommand("count", "dump n-gram counts");
  count->add_option("input", opt.input, "corpus file")->required();
  count->add_option("--order", opt.order, "n-gram order")->check(CLI::Range(1, 9));
  count->add_option("-o,--output", opt.output, "output file (default stdout)");

  CLI::App* train = app.add_subcommand("train", "train an ARPA model");
  train->add_option("input", opt.input, "training corpus")->required();
  add_method_flags(train);
  train->add_option("-o,--output", opt.output, "ARPA output file");
  train->add_option("--inject-words", opt.inject_words,
                    "extra corpus file appended to the training text");

  CLI::App* ppl = app.add_subcommand("ppl", "perplexity report as JSON");
  ppl->add_option("input", opt.input, "test corpus")->required();
  ppl->add_option("--model", opt.model_path, "ARPA model file")->required();
  ppl->add_option("-o,--output", opt.output, "output file (default stdout)");

  CLI::App* stem_rules =
      app.add_subcommand("stem-rules", "apply the supervised splitter");
  stem_rules->add_option("input", opt.input, "corpus file")->required();
  stem_rules->add_option("-o,--output", opt.output, "split corpus file")
      ->required();
  stem_rules->add_option("--rules", opt.rules_path, "suffix rule file");
  stem_rules->add_option("--min-stem", opt.min_stem,
                         "minimum stem length in code points");
  stem_rules->add_option("--marker", opt.marker, "suffix marker character");

  CLI::App* stem_learn = app.add_subcommand(
      "stem-learn", "build and prune the segmentation graph");
  stem_learn->add_option("input", opt.input, "corpus file")->required();
  stem_learn->add_option("--t-stem", opt.t_stem, "minimum suffixes per stem");
  stem_learn->add_option("--t-suffix", opt.t_suffix,
                         "minimum stems per suffix");
  stem_learn->add_option("--stems-out", opt.stems_out, "surviving stems file");
  stem_learn->add_option("--suffixes-out", opt.suffixes_out,
                         "surviving suffixes file");

  CLI::App* stem_apply =
      app.add_subcommand("stem-apply", "segment a corpus with a pruned graph");
  stem_apply->add_option("input", opt.input, "corpus to segment")->required();
  stem_apply->add_option("-o,--output", opt.output, "segmented corpus file")
      ->required();
  stem_apply->add_option("--graph-corpus", opt.graph_corpus,
                         "corpus the graph is learned from (default: input)");
  stem_apply->add_option("--t-stem", opt.t_stem, "minimum suffixes per stem");
  stem_apply->add_option("--t-suffix", opt.t_suffix,
                         "minimum stems per suffix");
  stem_apply->add_option("--marker", opt.marker, "suffix marker character");

  CLI::App* rejoin_cmd =
      app.add_subcommand("rejoin", "merge marked suffix tokens back");
  rejoin_cmd->add_option("input", opt.input, "corpus file")->required();
  rejoin_cmd->add_option("-o,--output", opt.output, "rejoined corpus file")
      ->required();
  rejoin_cmd->add_option("--marker", opt.marker, "suffix marker character");

  CLI::App* wer = app.add_subcommand("wer", "word error rate report as JSON");
  wer->add_option("reference", opt.input, "reference corpus")->required();
  wer->add_option("hypothesis", opt.second_input, "hypothesis corpus")
      ->required();
  wer->add_option("-o,--output", opt.output, "output file (default stdout)");

  CLI::App* experiment = app.add_subcommand(
      "experiment", "run the four training-corpus variants end to end");
  experiment->add_option("--train", opt.input, "training corpus");
  experiment->add_option("--test", opt.second_input, "test corpus");
  experiment->add_option("--config", opt.config_path, "JSON config file");
  add_method_flags(experiment);
  experiment->add_option("--rules", opt.rules_path, "suffix rule file");
  experiment->add_option("--t-stem", opt.t_stem, "minimum suffixes per stem");
  experiment->add_option("--t-suffix", opt.t_suffix,
                         "minimum stems per suffix");
  experiment->add_option("--marker", opt.marker, "suffix marker character");
  experiment->add_option("--outdir", opt.outdir,
                         "directory for per-variant models and reports");
  experiment->add_option("--inject-words", opt.inject_words,
                         "extra corpus file appended to the training text");
  experiment->add_option("-o,--output", opt.output, "CSV output file");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "vary the share of test text included in training");
  sweep->add_option("--train", opt.input, "training corpus");
  sweep->add_option("--test", opt.second_input, "test corpus");
  sweep->add_option("--config", opt.config_path, "JSON config file");
  add_method_flags(sweep);
  sweep->add_option("--mode", opt.mode, "stemming mode")
      ->check(CLI::IsMember(modes));
  sweep->add_option("--rules", opt.rules_path, "suffix rule file");
  sweep->add_option("--t-stem", opt.t_stem, "minimum suffixes per stem");
  sweep->add_option("--t-suffix", opt.t_suffix, "minimum stems per suffix");
  sweep->add_option("--marker", opt.marker, "suffix marker character");
  sweep->add_option("--fractions", opt.fractions,
                    "inclusion percentages (default 0 20 40 60 80 100)")
      ->delimiter(',');
  sweep->add_option("--inject-words", opt.inject_words,
                    "extra corpus file appended to the training text");
  sweep->add_option("-o,--output", opt.output, "CSV output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    if (app.got_subcommand(vocab)) return cmd_vocab(opt, out);
    if (app.got_subcommand(count)) return cmd_count(opt, out);
    if (app.got_subcommand(train)) return cmd_train(opt, out, err);
    if (app.got_subcommand(ppl)) return cmd_ppl(opt, out);
    if (app.got_subcommand(stem_rules)) return cmd_stem_rules(opt, out);
    if (app.got_subcommand(stem_learn)) return cmd_stem_learn(opt, out);
    if (app.got_subcommand(stem_apply)) return cmd_stem_apply(opt, out);
    if (app.got_subcommand(rejoin_cmd)) return cmd_rejoin(opt, out);
    if (app.got_subcommand(wer)) return cmd_wer(opt, out);
    if (app.got_subcommand(experiment))
      return cmd_experiment(opt, experiment, out, err);
    if (app.got_subcommand(sweep)) return cmd_sweep(opt, sweep, out, err);
    err << "error: no subcommand selected\n";
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
}

int run_command(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? argc - 1 : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_command(args, std::cout, std::cerr);
}

}  // namespace morphlm
