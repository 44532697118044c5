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

#ifndef SEGDISC_HARNESS_H_
#define SEGDISC_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <unordered_set>
#include <vector>

#include "segdisc/corpus.h"
#include "segdisc/evaluation.h"
#include "segdisc/segmenter.h"

namespace segdisc {

struct ExperimentOptions {
  LearnerConfig learner;
  int runs = 1;
  std::uint64_t base_seed = 0;
  // Run r sees Permute(corpus, base_seed + r) when set, the corpus order
  // otherwise.
  bool permute = false;
  std::size_t block_size = 100;  // 0: one block for the whole stream
  double train_fraction = 0.0;
  std::size_t sweep_step = 100;  // utterances
  double sweep_cap = 0.75;
  bool random_baseline = false;
  ReferenceLexicon lexicon_mode = ReferenceLexicon::kFull;
  // Worker threads; 0 reads SEGDISC_THREADS, falling back to the hardware.
  std::size_t threads = 0;

  // Throws ConfigError.
  void Validate() const;
  std::string ModelName() const;
};

std::size_t WorkerCount(std::size_t requested);

// Calls fn(i) for i in [0, count) on up to `threads` workers. The first
// exception thrown by any task is rethrown after all workers stop.
void ParallelFor(std::size_t count, std::size_t threads,
                 const std::function<void(std::size_t)>& fn);

std::unordered_set<std::string> ReferenceLexiconOf(const Corpus& corpus);

// One incremental pass: the first `train_count` utterances are presented
// with their reference segmentation, the rest are segmented and committed.
// Returns the segmented (test) part. `training_words` receives the words
// learned from the training part.
struct PassResult {
  std::vector<ScoredUtterance> scored;
  std::unordered_set<std::string> training_words;
  std::vector<std::size_t> lexicon_sizes;  // after each test utterance
};
PassResult RunPass(const Corpus& ordered, std::size_t train_count,
                   const ExperimentOptions& options, std::uint64_t seed);

Corpus RunOrder(const Corpus& corpus, const ExperimentOptions& options, int run);

// One CSV row of the metrics file.
struct MetricsRow {
  std::string run_id;
  std::size_t block_index = 0;
  std::size_t utterances = 0;
  double precision = 0;
  double recall = 0;
  double lexicon_precision = 0;
  std::string model;
  std::string phoneme_mode;
  double train_fraction = 0;
  bool partial = false;  // not part of the CSV
};

inline constexpr const char* kMetricsHeader =
    "run_id,block_index,utterances,precision,recall,lexicon_precision,model,"
    "phoneme_mode,train_fraction";

void WriteMetricsCsv(std::ostream& out, const std::vector<MetricsRow>& rows,
                     bool header = true);

struct MeanStd {
  double mean = 0;
  double stddev = 0;  // sample standard deviation; 0 for a single run
};
MeanStd Summarize(const std::vector<double>& values);

struct BlockSummary {
  std::size_t block_index = 0;
  std::size_t utterances = 0;
  bool partial = false;
  MeanStd precision, recall, lexicon_precision;
};

struct AveragedMetrics {
  std::vector<MetricsRow> rows;  // per run, ordered by run then block
  std::vector<BlockSummary> summary;
  // "mean" and "stddev" rows for the CSV.
  std::vector<MetricsRow> SummaryRows(const ExperimentOptions& options) const;
};

// Scores every run of `options.runs` in blocks of options.block_size.
AveragedMetrics RunBlocks(const Corpus& corpus, const ExperimentOptions& options);

// Training-fraction sweep: 0, step, 2*step, ... utterances up to the cap,
// each scored as a single block over the test part and averaged over runs.
struct SweepPoint {
  std::size_t train_utterances = 0;
  double train_fraction = 0;
  MeanStd precision, recall, lexicon_precision;
};
struct SweepResult {
  std::vector<MetricsRow> rows;
  std::vector<SweepPoint> points;
};
SweepResult RunTrainSweep(const Corpus& corpus, const ExperimentOptions& options);

// Supervised training on the corpus, then segmentation of a second copy.
struct SegmentationError {
  std::size_t index = 0;  // 1-based line in the corpus file
  std::string predicted;
  std::string target;
};
struct FullyTrainedReport {
  std::size_t utterances = 0;
  TokenCounts tokens;
  std::vector<SegmentationError> errors;
};
FullyTrainedReport RunFullyTrained(const Corpus& corpus, const ExperimentOptions& options);

// Presents "D&mbrItIS", "D&m" twice, x times "brItIS" and "D&mbrItIS" again,
// for each x in [1, max_x].
struct ScenarioStep {
  int x = 0;
  bool split = false;
  std::string output;
  double whole_score = 0;  // -ln P(D&mbrItIS)
  double first_score = 0;  // -ln P(D&m)
  double second_score = 0; // -ln P(brItIS | D&m) at the configured order
};
struct ScenarioReport {
  std::vector<ScenarioStep> steps;
  int first_split = 0;  // 0 if never split
  // Smallest x with P(D&m) P(brItIS) > P(D&mbrItIS) under the unigram
  // model, where the three probabilities are 2/(x+6), x/(x+6), 1/(x+6).
  int analytic_threshold = 0;
};
ScenarioReport RunDamnBritish(const LearnerConfig& config, int max_x = 10);

// Lexicon size against word tokens processed, for the learner and for the
// reference segmentation, averaged over runs; k fitted to size = k sqrt(N).
struct GrowthPoint {
  std::size_t utterances = 0;
  double model_tokens = 0;
  double model_lexicon = 0;
  double actual_tokens = 0;
  double actual_lexicon = 0;
};
struct GrowthReport {
  std::vector<GrowthPoint> points;
  double k_model = 0;
  double k_actual = 0;
};
GrowthReport RunLexiconGrowth(const Corpus& corpus, const ExperimentOptions& options);

// Least-squares k for y = k sqrt(x).
double FitSqrtGrowth(const std::vector<double>& x, const std::vector<double>& y);

struct ModeCell {
  int order = 1;
  PhonemeMode mode = PhonemeMode::kLexicon;
  MeanStd precision, recall, lexicon_precision;
};
// Orders 1-3 against the three phoneme modes, whole corpus as one block.
std::vector<ModeCell> RunPhonemeModeMatrix(const Corpus& corpus,
                                           const ExperimentOptions& options);

}  // namespace segdisc

#endif  // SEGDISC_HARNESS_H_
