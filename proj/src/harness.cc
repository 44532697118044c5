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

#include "segdisc/harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <thread>

#include "segdisc/errors.h"
#include "segdisc/estimator.h"
#include "segdisc/random.h"

namespace segdisc {

void ExperimentOptions::Validate() const {
  learner.Validate();
  if (runs < 1) throw ConfigError("--runs must be at least 1");
  if (sweep_step < 1) throw ConfigError("--sweep-step must be at least 1");
  if (train_fraction < 0.0 || train_fraction > 1.0) {
    throw ConfigError("--train-frac must lie in [0, 1]");
  }
  if (sweep_cap < 0.0 || sweep_cap > 1.0) {
    throw ConfigError("--sweep-cap must lie in [0, 1]");
  }
}

std::string ExperimentOptions::ModelName() const {
  if (random_baseline) return "random";
  return std::to_string(learner.order) + "-gram";
}

std::size_t WorkerCount(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SEGDISC_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw ConfigError(std::string("SEGDISC_THREADS must be a positive integer, got '") +
                      env + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void ParallelFor(std::size_t count, std::size_t threads,
                 const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min(std::max<std::size_t>(threads, 1), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::unordered_set<std::string> ReferenceLexiconOf(const Corpus& corpus) {
  std::unordered_set<std::string> lexicon;
  for (const Utterance& u : corpus.utterances()) {
    for (const Word& w : u.reference) lexicon.insert(w.phonemes());
  }
  return lexicon;
}

Corpus RunOrder(const Corpus& corpus, const ExperimentOptions& options, int run) {
  if (!options.permute) return corpus;
  return Permute(corpus, options.base_seed + static_cast<std::uint64_t>(run));
}

PassResult RunPass(const Corpus& ordered, std::size_t train_count,
                   const ExperimentOptions& options, std::uint64_t seed) {
  PassResult result;
  Learner learner(options.learner);
  Rng rng(seed ^ 0x5bd1e9955bd1e995ULL);
  const auto& all = ordered.utterances();
  train_count = std::min(train_count, all.size());
  for (std::size_t i = 0; i < train_count; ++i) {
    learner.Train(all[i].reference);
    for (const Word& w : all[i].reference) result.training_words.insert(w.phonemes());
  }
  result.scored.reserve(all.size() - train_count);
  result.lexicon_sizes.reserve(all.size() - train_count);
  std::unordered_set<std::string> baseline_lexicon;
  for (std::size_t i = train_count; i < all.size(); ++i) {
    const Utterance& u = all[i];
    Segmentation predicted;
    if (options.random_baseline) {
      predicted = RandomSegmentation(u.raw, u.reference.size() - 1, rng);
      for (auto w : predicted.WordViews()) baseline_lexicon.emplace(w);
      result.lexicon_sizes.push_back(baseline_lexicon.size());
    } else {
      predicted = learner.Process(u.raw);
      result.lexicon_sizes.push_back(learner.tables().LexiconSize());
    }
    result.scored.push_back({std::move(predicted), u.reference});
  }
  return result;
}

void WriteMetricsCsv(std::ostream& out, const std::vector<MetricsRow>& rows,
                     bool header) {
  if (header) out << kMetricsHeader << '\n';
  auto flags = out.flags();
  auto precision = out.precision();
  out << std::fixed << std::setprecision(4);
  for (const MetricsRow& r : rows) {
    out << r.run_id << ',' << r.block_index << ',' << r.utterances << ','
        << r.precision << ',' << r.recall << ',' << r.lexicon_precision << ','
        << r.model << ',' << r.phoneme_mode << ',' << r.train_fraction << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

MeanStd Summarize(const std::vector<double>& values) {
  MeanStd s;
  if (values.empty()) return s;
  double sum = 0;
  for (double v : values) sum += v;
  s.mean = sum / values.size();
  if (values.size() > 1) {
    double sq = 0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / (values.size() - 1));
  }
  return s;
}

namespace {

std::string ModeName(const ExperimentOptions& o) {
  return std::string(PhonemeModeName(o.learner.phoneme_mode));
}

MetricsRow MakeRow(std::string run_id, const BlockScores& b,
                   const ExperimentOptions& o, double train_fraction) {
  return {std::move(run_id), b.block_index, b.utterances, b.precision, b.recall,
          b.lexicon_precision, o.ModelName(), ModeName(o), train_fraction,
          b.partial};
}

// Whole-stream scores of one pass.
BlockScores ScoreWhole(const PassResult& pass, const ExperimentOptions& options,
                       const std::unordered_set<std::string>& reference) {
  BlockScoringOptions scoring;
  scoring.block_size = 0;
  scoring.lexicon_mode = options.lexicon_mode;
  scoring.reference_lexicon = &reference;
  scoring.initial_lexicon = &pass.training_words;
  auto blocks = ScoreBlocks(pass.scored, scoring);
  if (blocks.empty()) return BlockScores{};
  return blocks.front();
}

}  // namespace

std::vector<MetricsRow> AveragedMetrics::SummaryRows(
    const ExperimentOptions& options) const {
  std::vector<MetricsRow> out;
  for (const char* which : {"mean", "stddev"}) {
    bool mean = std::string(which) == "mean";
    for (const BlockSummary& b : summary) {
      MetricsRow r;
      r.run_id = which;
      r.block_index = b.block_index;
      r.utterances = b.utterances;
      r.precision = mean ? b.precision.mean : b.precision.stddev;
      r.recall = mean ? b.recall.mean : b.recall.stddev;
      r.lexicon_precision = mean ? b.lexicon_precision.mean : b.lexicon_precision.stddev;
      r.model = options.ModelName();
      r.phoneme_mode = ModeName(options);
      r.train_fraction = options.train_fraction;
      r.partial = b.partial;
      out.push_back(r);
    }
  }
  return out;
}

AveragedMetrics RunBlocks(const Corpus& corpus, const ExperimentOptions& options) {
  options.Validate();
  const auto reference = ReferenceLexiconOf(corpus);
  std::vector<std::vector<BlockScores>> per_run(options.runs);
  ParallelFor(options.runs, WorkerCount(options.threads), [&](std::size_t r) {
    Corpus ordered = RunOrder(corpus, options, static_cast<int>(r));
    SplitPlan plan{options.train_fraction, options.base_seed + r, 1};
    PassResult pass = RunPass(ordered, plan.TrainCount(ordered.size()), options,
                              options.base_seed + r);
    BlockScoringOptions scoring;
    scoring.block_size = options.block_size;
    scoring.lexicon_mode = options.lexicon_mode;
    scoring.reference_lexicon = &reference;
    scoring.initial_lexicon = &pass.training_words;
    per_run[r] = ScoreBlocks(pass.scored, scoring);
  });

  AveragedMetrics result;
  for (int r = 0; r < options.runs; ++r) {
    for (const BlockScores& b : per_run[r]) {
      result.rows.push_back(MakeRow(std::to_string(r), b, options, options.train_fraction));
    }
  }
  const std::size_t blocks = per_run.front().size();
  for (std::size_t b = 0; b < blocks; ++b) {
    std::vector<double> p, rc, lx;
    for (const auto& run : per_run) {
      p.push_back(run[b].precision);
      rc.push_back(run[b].recall);
      lx.push_back(run[b].lexicon_precision);
    }
    result.summary.push_back({b, per_run.front()[b].utterances,
                              per_run.front()[b].partial, Summarize(p),
                              Summarize(rc), Summarize(lx)});
  }
  return result;
}

SweepResult RunTrainSweep(const Corpus& corpus, const ExperimentOptions& options) {
  options.Validate();
  const auto reference = ReferenceLexiconOf(corpus);
  const std::size_t n = corpus.size();
  const auto cap = static_cast<std::size_t>(std::floor(options.sweep_cap * n + 1e-9));
  std::vector<std::size_t> train_counts;
  for (std::size_t t = 0; t <= cap && t < n; t += options.sweep_step) {
    train_counts.push_back(t);
  }

  const std::size_t runs = options.runs;
  std::vector<BlockScores> cells(train_counts.size() * runs);
  ParallelFor(cells.size(), WorkerCount(options.threads), [&](std::size_t cell) {
    std::size_t f = cell / runs, r = cell % runs;
    Corpus ordered = RunOrder(corpus, options, static_cast<int>(r));
    PassResult pass = RunPass(ordered, train_counts[f], options, options.base_seed + r);
    cells[cell] = ScoreWhole(pass, options, reference);
  });

  SweepResult result;
  for (std::size_t f = 0; f < train_counts.size(); ++f) {
    const double fraction = static_cast<double>(train_counts[f]) / n;
    std::vector<double> p, rc, lx;
    for (std::size_t r = 0; r < runs; ++r) {
      const BlockScores& b = cells[f * runs + r];
      result.rows.push_back(MakeRow(std::to_string(r), b, options, fraction));
      p.push_back(b.precision);
      rc.push_back(b.recall);
      lx.push_back(b.lexicon_precision);
    }
    result.points.push_back({train_counts[f], fraction, Summarize(p), Summarize(rc),
                             Summarize(lx)});
  }
  return result;
}

FullyTrainedReport RunFullyTrained(const Corpus& corpus,
                                   const ExperimentOptions& options) {
  options.Validate();
  Corpus ordered = RunOrder(corpus, options, 0);
  Corpus doubled = ordered.Doubled();
  PassResult pass = RunPass(doubled, ordered.size(), options, options.base_seed);

  FullyTrainedReport report;
  report.utterances = pass.scored.size();
  for (std::size_t i = 0; i < pass.scored.size(); ++i) {
    const ScoredUtterance& s = pass.scored[i];
    TokenCounts counts = ScoreUtterance(s.predicted, s.reference);
    report.tokens += counts;
    if (counts.correct != counts.predicted || counts.correct != counts.reference) {
      report.errors.push_back({ordered[i].source_index, s.predicted.ToString(),
                               JoinWords(s.reference)});
    }
  }
  return report;
}

ScenarioReport RunDamnBritish(const LearnerConfig& config, int max_x) {
  config.Validate();
  const std::string whole = "D&mbrItIS";
  const std::string first = "D&m";
  const std::string second = "brItIS";

  ScenarioReport report;
  for (int x = 1; 2 * x * (x + 6) <= (x + 6) * (x + 6); ++x) {
    report.analytic_threshold = x + 1;
  }
  for (int x = 1; x <= max_x; ++x) {
    Learner learner(config);
    learner.Process(whole);
    learner.Process(first);
    learner.Process(first);
    for (int i = 0; i < x; ++i) learner.Process(second);

    ScenarioStep step;
    step.x = x;
    const CountTables& t = learner.tables();
    const std::string_view context[] = {first};
    step.whole_score = WordScore(t, {}, whole, config.order);
    step.first_score = WordScore(t, {}, first, config.order);
    step.second_score = WordScore(t, context, second, config.order);
    Segmentation out = learner.Process(whole);
    step.output = out.ToString();
    step.split = out.WordCount() > 1;
    if (step.split && report.first_split == 0) report.first_split = x;
    report.steps.push_back(step);
  }
  return report;
}

double FitSqrtGrowth(const std::vector<double>& x, const std::vector<double>& y) {
  double num = 0, den = 0;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    num += y[i] * std::sqrt(x[i]);
    den += x[i];
  }
  return den == 0 ? 0.0 : num / den;
}

GrowthReport RunLexiconGrowth(const Corpus& corpus, const ExperimentOptions& options) {
  options.Validate();
  const std::size_t n = corpus.size();
  struct Curve {
    std::vector<double> model_tokens, model_lexicon, actual_tokens, actual_lexicon;
  };
  std::vector<Curve> curves(options.runs);
  ParallelFor(options.runs, WorkerCount(options.threads), [&](std::size_t r) {
    Corpus ordered = RunOrder(corpus, options, static_cast<int>(r));
    PassResult pass = RunPass(ordered, 0, options, options.base_seed + r);
    Curve& c = curves[r];
    std::unordered_set<std::string> actual;
    double model_tokens = 0, actual_tokens = 0;
    for (std::size_t i = 0; i < n; ++i) {
      model_tokens += pass.scored[i].predicted.WordCount();
      actual_tokens += pass.scored[i].reference.size();
      for (const Word& w : pass.scored[i].reference) actual.insert(w.phonemes());
      c.model_tokens.push_back(model_tokens);
      c.model_lexicon.push_back(static_cast<double>(pass.lexicon_sizes[i]));
      c.actual_tokens.push_back(actual_tokens);
      c.actual_lexicon.push_back(static_cast<double>(actual.size()));
    }
  });

  GrowthReport report;
  std::vector<double> mx, my, ax, ay;
  for (std::size_t i = 0; i < n; ++i) {
    GrowthPoint p;
    p.utterances = i + 1;
    for (const Curve& c : curves) {
      p.model_tokens += c.model_tokens[i];
      p.model_lexicon += c.model_lexicon[i];
      p.actual_tokens += c.actual_tokens[i];
      p.actual_lexicon += c.actual_lexicon[i];
    }
    const double runs = options.runs;
    p.model_tokens /= runs;
    p.model_lexicon /= runs;
    p.actual_tokens /= runs;
    p.actual_lexicon /= runs;
    mx.push_back(p.model_tokens);
    my.push_back(p.model_lexicon);
    ax.push_back(p.actual_tokens);
    ay.push_back(p.actual_lexicon);
    report.points.push_back(p);
  }
  report.k_model = FitSqrtGrowth(mx, my);
  report.k_actual = FitSqrtGrowth(ax, ay);
  return report;
}

std::vector<ModeCell> RunPhonemeModeMatrix(const Corpus& corpus,
                                           const ExperimentOptions& options) {
  options.Validate();
  const auto reference = ReferenceLexiconOf(corpus);
  constexpr PhonemeMode kModes[] = {PhonemeMode::kUniform, PhonemeMode::kLexicon,
                                    PhonemeMode::kSpeech};
  const std::size_t runs = options.runs;
  const std::size_t cells = 3 * 3;
  std::vector<BlockScores> results(cells * runs);
  ParallelFor(results.size(), WorkerCount(options.threads), [&](std::size_t task) {
    std::size_t cell = task / runs, r = task % runs;
    ExperimentOptions o = options;
    o.learner.order = static_cast<int>(cell / 3) + 1;
    o.learner.phoneme_mode = kModes[cell % 3];
    Corpus ordered = RunOrder(corpus, o, static_cast<int>(r));
    PassResult pass = RunPass(ordered, 0, o, o.base_seed + r);
    results[task] = ScoreWhole(pass, o, reference);
  });

  std::vector<ModeCell> out;
  for (std::size_t cell = 0; cell < cells; ++cell) {
    std::vector<double> p, rc, lx;
    for (std::size_t r = 0; r < runs; ++r) {
      const BlockScores& b = results[cell * runs + r];
      p.push_back(b.precision);
      rc.push_back(b.recall);
      lx.push_back(b.lexicon_precision);
    }
    out.push_back({static_cast<int>(cell / 3) + 1, kModes[cell % 3], Summarize(p),
                   Summarize(rc), Summarize(lx)});
  }
  return out;
}

}  // namespace segdisc
