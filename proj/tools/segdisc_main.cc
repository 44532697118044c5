// Copyright 2026 The segdisc Authors.
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

// segdisc: command-line driver for the word-discovery experiments.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "segdisc/corpus.h"
#include "segdisc/errors.h"
#include "segdisc/harness.h"
#include "segdisc/tables.h"

namespace {

using namespace segdisc;

constexpr int kExitConfig = 1;
constexpr int kExitInternal = 2;

// Raised when a self-check of the experiment fails.
class AssertionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string corpus;
  int order = 1;
  int runs = 0;  // 0: per-command default
  std::uint64_t seed = 0;
  std::size_t block_size = 0;
  double train_frac = 0.0;
  std::size_t sweep_step = 100;
  double sweep_cap = 0.75;
  std::string phoneme_mode = "lexicon";
  bool require_vowel = false;
  bool baseline_random = false;
  std::string lexicon_reference = "full";
  std::string out;
  std::string dump_tables;
  std::size_t max_x = 10;
};

struct CommandDefaults {
  int runs = 1;
  std::size_t block_size = 0;
  bool always_permute = false;
};

// Main output goes to --out when given, else stdout. Human-readable notes go
// to stdout in the first case and stderr in the second.
class Sinks {
 public:
  explicit Sinks(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw IoFailure("cannot write " + path);
    }
  }
  std::ostream& data() { return file_ ? *file_ : std::cout; }
  std::ostream& notes() { return file_ ? std::cout : std::cerr; }
  void Close() {
    if (file_) {
      file_->flush();
      if (!*file_) throw IoFailure("write error on output file");
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void AddCommonOptions(CLI::App* cmd, Flags& f, bool needs_corpus) {
  auto* corpus = cmd->add_option("--corpus", f.corpus, "Corpus file, one utterance per line");
  if (needs_corpus) corpus->required();
  cmd->add_option("--order", f.order, "n-gram order")->required()->check(CLI::Range(1, 3));
  cmd->add_option("--runs", f.runs, "Number of runs (permutations)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "Base seed; run r uses seed + r");
  cmd->add_option("--block-size", f.block_size, "Utterances per scoring block")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--train-frac", f.train_frac, "Fraction of the corpus used for training")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--sweep-step", f.sweep_step, "Training step in utterances")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--sweep-cap", f.sweep_cap, "Largest training fraction of the sweep")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--phoneme-mode", f.phoneme_mode, "uniform|lexicon|speech")
      ->check(CLI::IsMember({"uniform", "lexicon", "speech"}));
  cmd->add_flag("--require-vowel", f.require_vowel, "Every word must contain a vowel");
  cmd->add_flag("--baseline-random", f.baseline_random,
                "Random segmenter told the true boundary count");
  cmd->add_option("--lexicon-reference", f.lexicon_reference,
                  "Genuine words for lexicon precision: full|seen")
      ->check(CLI::IsMember({"full", "seen"}));
  cmd->add_option("--out", f.out, "Output file (default: stdout)");
}

ExperimentOptions BuildOptions(const Flags& f, const CLI::App* cmd,
                               const CommandDefaults& defaults) {
  ExperimentOptions o;
  o.learner.order = f.order;
  o.learner.phoneme_mode = ParsePhonemeMode(f.phoneme_mode);
  o.learner.require_vowel = f.require_vowel;
  o.runs = f.runs > 0 ? f.runs : defaults.runs;
  o.base_seed = f.seed;
  o.permute = defaults.always_permute || cmd->count("--seed") > 0 || o.runs > 1;
  o.block_size = f.block_size > 0 ? f.block_size : defaults.block_size;
  o.train_fraction = f.train_frac;
  o.sweep_step = f.sweep_step;
  o.sweep_cap = f.sweep_cap;
  o.random_baseline = f.baseline_random;
  o.lexicon_mode =
      f.lexicon_reference == "seen" ? ReferenceLexicon::kSeen : ReferenceLexicon::kFull;
  o.Validate();
  return o;
}

void PrintSummary(std::ostream& out, const AveragedMetrics& m, int runs) {
  out << "block  utts   precision        recall           lexicon\n";
  out << std::fixed << std::setprecision(2);
  for (const BlockSummary& b : m.summary) {
    out << std::setw(5) << b.block_index << std::setw(6) << b.utterances << "  "
        << std::setw(6) << b.precision.mean;
    if (runs > 1) out << " ±" << std::setw(5) << b.precision.stddev;
    out << "   " << std::setw(6) << b.recall.mean;
    if (runs > 1) out << " ±" << std::setw(5) << b.recall.stddev;
    out << "   " << std::setw(6) << b.lexicon_precision.mean;
    if (runs > 1) out << " ±" << std::setw(5) << b.lexicon_precision.stddev;
    if (b.partial) out << "  (partial)";
    out << '\n';
  }
}

int RunSegment(const Flags& f, const CLI::App* cmd) {
  ExperimentOptions o = BuildOptions(f, cmd, {1, 0, false});
  Corpus corpus = RunOrder(LoadCorpus(f.corpus), o, 0);
  Sinks sinks(f.out);
  Learner learner(o.learner);
  Rng rng(o.base_seed ^ 0x5bd1e9955bd1e995ULL);
  std::size_t train = SplitPlan{o.train_fraction, o.base_seed, 1}.TrainCount(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Utterance& u = corpus[i];
    if (i < train) {
      learner.Train(u.reference);
      sinks.data() << JoinWords(u.reference) << '\n';
    } else if (o.random_baseline) {
      sinks.data() << RandomSegmentation(u.raw, u.reference.size() - 1, rng).ToString()
                   << '\n';
    } else {
      sinks.data() << learner.Process(u.raw).ToString() << '\n';
    }
  }
  sinks.Close();
  if (!f.dump_tables.empty()) {
    std::ofstream dump(f.dump_tables);
    if (!dump) throw IoFailure("cannot write " + f.dump_tables);
    learner.tables().Dump(dump);
  }
  return 0;
}

int RunMetrics(const Flags& f, const CLI::App* cmd, const CommandDefaults& defaults) {
  ExperimentOptions o = BuildOptions(f, cmd, defaults);
  Corpus corpus = LoadCorpus(f.corpus);
  AveragedMetrics m = RunBlocks(corpus, o);
  Sinks sinks(f.out);
  WriteMetricsCsv(sinks.data(), m.rows);
  if (o.runs > 1) WriteMetricsCsv(sinks.data(), m.SummaryRows(o), false);
  sinks.Close();
  PrintSummary(sinks.notes(), m, o.runs);
  return 0;
}

int RunSweep(const Flags& f, const CLI::App* cmd) {
  ExperimentOptions o = BuildOptions(f, cmd, {25, 0, true});
  Corpus corpus = LoadCorpus(f.corpus);
  SweepResult sweep = RunTrainSweep(corpus, o);
  Sinks sinks(f.out);
  WriteMetricsCsv(sinks.data(), sweep.rows);
  sinks.Close();
  auto& notes = sinks.notes();
  notes << "train  fraction  precision  recall  lexicon\n" << std::fixed;
  for (const SweepPoint& p : sweep.points) {
    notes << std::setw(5) << p.train_utterances << std::setprecision(4) << std::setw(10)
          << p.train_fraction << std::setprecision(2) << std::setw(11) << p.precision.mean
          << std::setw(8) << p.recall.mean << std::setw(9) << p.lexicon_precision.mean
          << '\n';
  }
  return 0;
}

int RunFullyTrainedCommand(const Flags& f, const CLI::App* cmd) {
  ExperimentOptions o = BuildOptions(f, cmd, {1, 0, false});
  FullyTrainedReport report = RunFullyTrained(LoadCorpus(f.corpus), o);
  Sinks sinks(f.out);
  auto& out = sinks.data();
  out << "# " << o.ModelName() << " fully trained: " << report.errors.size()
      << " of " << report.utterances << " utterances in error\n";
  out << "index\toutput\ttarget\n";
  for (const SegmentationError& e : report.errors) {
    out << e.index << '\t' << e.predicted << '\t' << e.target << '\n';
  }
  sinks.Close();
  return 0;
}

int RunScenario(const Flags& f, const CLI::App* cmd) {
  ExperimentOptions o = BuildOptions(f, cmd, {1, 0, false});
  ScenarioReport report = RunDamnBritish(o.learner, static_cast<int>(f.max_x));
  Sinks sinks(f.out);
  auto& out = sinks.data();
  out << "x\toutput\t-lnP(whole)\t-lnP(D&m)\t-lnP(brItIS)\tsplit_total\n";
  out << std::fixed << std::setprecision(6);
  for (const ScenarioStep& s : report.steps) {
    out << s.x << '\t' << s.output << '\t' << s.whole_score << '\t' << s.first_score
        << '\t' << s.second_score << '\t' << s.first_score + s.second_score << '\n';
  }
  out << "# first split at x = " << report.first_split << "; unigram analytic threshold x = "
      << report.analytic_threshold << '\n';
  sinks.Close();
  if (o.learner.order == 1 && report.first_split != report.analytic_threshold) {
    throw AssertionFailure("unigram learner split at x = " +
                           std::to_string(report.first_split) + ", expected " +
                           std::to_string(report.analytic_threshold));
  }
  return 0;
}

int RunGrowth(const Flags& f, const CLI::App* cmd) {
  ExperimentOptions o = BuildOptions(f, cmd, {1, 0, false});
  GrowthReport report = RunLexiconGrowth(LoadCorpus(f.corpus), o);
  Sinks sinks(f.out);
  auto& out = sinks.data();
  out << "utterances,model_tokens,model_lexicon,actual_tokens,actual_lexicon\n";
  out << std::fixed << std::setprecision(3);
  for (const GrowthPoint& p : report.points) {
    out << p.utterances << ',' << p.model_tokens << ',' << p.model_lexicon << ','
        << p.actual_tokens << ',' << p.actual_lexicon << '\n';
  }
  sinks.Close();
  sinks.notes() << std::fixed << std::setprecision(3) << "k_model=" << report.k_model
                << " k_actual=" << report.k_actual << '\n';
  return 0;
}

int RunModes(const Flags& f, const CLI::App* cmd) {
  ExperimentOptions o = BuildOptions(f, cmd, {1, 0, false});
  auto cells = RunPhonemeModeMatrix(LoadCorpus(f.corpus), o);
  Sinks sinks(f.out);
  auto& out = sinks.data();
  out << "model,phoneme_mode,precision,recall,lexicon_precision\n";
  out << std::fixed << std::setprecision(4);
  for (const ModeCell& c : cells) {
    out << c.order << "-gram," << PhonemeModeName(c.mode) << ',' << c.precision.mean << ','
        << c.recall.mean << ',' << c.lexicon_precision.mean << '\n';
  }
  sinks.Close();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incremental n-gram word discovery in unsegmented phonemic utterances"};
  app.require_subcommand(1);
  Flags flags;

  auto* segment = app.add_subcommand("segment", "Segment a corpus incrementally, print the result");
  AddCommonOptions(segment, flags, true);
  segment->add_option("--dump-tables", flags.dump_tables, "Write the final count tables here");
  auto* eval = app.add_subcommand("eval", "Single run, block precision/recall CSV");
  AddCommonOptions(eval, flags, true);
  auto* average = app.add_subcommand("permute-average", "Block metrics averaged over permutations");
  AddCommonOptions(average, flags, true);
  auto* sweep = app.add_subcommand("train-sweep", "Scores against amount of supervised training");
  AddCommonOptions(sweep, flags, true);
  auto* fully = app.add_subcommand("fully-trained", "Train on the corpus, test on a copy of it");
  AddCommonOptions(fully, flags, true);
  auto* scenario = app.add_subcommand("scenario-damn-british",
                                      "How many isolated 'brItIS' before 'D&mbrItIS' splits");
  AddCommonOptions(scenario, flags, false);
  scenario->add_option("--max-x", flags.max_x, "Largest number of 'brItIS' presentations")
      ->check(CLI::PositiveNumber);
  auto* growth = app.add_subcommand("lexicon-growth", "Lexicon size against tokens processed");
  AddCommonOptions(growth, flags, true);
  auto* modes = app.add_subcommand("phoneme-modes", "Orders 1-3 against phoneme modes");
  AddCommonOptions(modes, flags, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*segment) return RunSegment(flags, segment);
    if (*eval) return RunMetrics(flags, eval, {1, 500, false});
    if (*average) return RunMetrics(flags, average, {50, 100, true});
    if (*sweep) return RunSweep(flags, sweep);
    if (*fully) return RunFullyTrainedCommand(flags, fully);
    if (*scenario) return RunScenario(flags, scenario);
    if (*growth) return RunGrowth(flags, growth);
    if (*modes) return RunModes(flags, modes);
  } catch (const segdisc::Error& e) {
    std::cerr << "segdisc: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "segdisc: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
