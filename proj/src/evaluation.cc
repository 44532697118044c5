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

#include "segdisc/evaluation.h"

#include <algorithm>
#include <numeric>

#include "segdisc/errors.h"

namespace segdisc {

TokenCounts ScoreUtterance(const Segmentation& predicted,
                           std::span<const Word> reference) {
  std::string target;
  std::vector<std::size_t> ref_ends;
  for (const Word& w : reference) {
    target += w.phonemes();
    ref_ends.push_back(target.size());
  }
  if (target != predicted.phonemes()) {
    throw MismatchedUtterance("predicted '" + predicted.ToString() +
                              "' does not spell reference '" +
                              JoinWords({reference.begin(), reference.end()}) + "'");
  }

  std::vector<std::size_t> pred_ends = predicted.boundaries();
  pred_ends.push_back(target.size());

  // Walk both span lists in order; a span matches when both its start and
  // its end coincide.
  TokenCounts counts{0, pred_ends.size(), ref_ends.size()};
  std::size_t p = 0, r = 0, p_start = 0, r_start = 0;
  while (p < pred_ends.size() && r < ref_ends.size()) {
    if (pred_ends[p] == ref_ends[r]) {
      if (p_start == r_start) ++counts.correct;
      p_start = pred_ends[p++];
      r_start = ref_ends[r++];
    } else if (pred_ends[p] < ref_ends[r]) {
      p_start = pred_ends[p++];
    } else {
      r_start = ref_ends[r++];
    }
  }
  return counts;
}

double Precision(const TokenCounts& c) {
  return c.predicted == 0 ? 0.0 : 100.0 * c.correct / c.predicted;
}

double Recall(const TokenCounts& c) {
  return c.reference == 0 ? 0.0 : 100.0 * c.correct / c.reference;
}

LexiconAudit AuditLexicon(const std::unordered_set<std::string>& learned,
                          const std::unordered_set<std::string>& reference) {
  LexiconAudit audit;
  for (const auto& w : learned) {
    if (reference.contains(w)) {
      ++audit.correct;
    } else {
      ++audit.incorrect;
    }
  }
  return audit;
}

std::vector<BlockScores> ScoreBlocks(std::span<const ScoredUtterance> stream,
                                     const BlockScoringOptions& options) {
  const std::size_t block_size =
      options.block_size == 0 ? std::max<std::size_t>(stream.size(), 1)
                              : options.block_size;
  std::unordered_set<std::string> learned;
  if (options.initial_lexicon) learned = *options.initial_lexicon;
  std::unordered_set<std::string> seen_reference;
  static const std::unordered_set<std::string> kNone;
  const auto& full = options.reference_lexicon ? *options.reference_lexicon : kNone;

  std::vector<BlockScores> blocks;
  for (std::size_t start = 0; start < stream.size(); start += block_size) {
    const std::size_t end = std::min(stream.size(), start + block_size);
    BlockScores block;
    block.block_index = blocks.size();
    block.utterances = end - start;
    block.partial = block.utterances < block_size;
    for (std::size_t i = start; i < end; ++i) {
      const ScoredUtterance& s = stream[i];
      block.tokens += ScoreUtterance(s.predicted, s.reference);
      for (std::string_view w : s.predicted.WordViews()) learned.emplace(w);
      if (options.lexicon_mode == ReferenceLexicon::kSeen) {
        for (const Word& w : s.reference) seen_reference.insert(w.phonemes());
      }
    }
    block.precision = Precision(block.tokens);
    block.recall = Recall(block.tokens);
    const auto& genuine =
        options.lexicon_mode == ReferenceLexicon::kSeen ? seen_reference : full;
    LexiconAudit audit = AuditLexicon(learned, genuine);
    block.lexicon_precision =
        learned.empty() ? 0.0 : 100.0 * audit.correct / learned.size();
    blocks.push_back(block);
  }
  return blocks;
}

Segmentation RandomSegmentation(std::string_view phonemes,
                                std::size_t boundary_count, Rng& rng) {
  if (phonemes.empty()) throw EmptyUtterance();
  const std::size_t slots = phonemes.size() - 1;
  if (boundary_count > slots) throw InfeasibleBoundaryCount(boundary_count, slots);

  // Partial Fisher-Yates over positions 1..n-1.
  std::vector<std::size_t> positions(slots);
  std::iota(positions.begin(), positions.end(), 1);
  for (std::size_t i = 0; i < boundary_count; ++i) {
    std::size_t j = i + rng.Below(slots - i);
    std::swap(positions[i], positions[j]);
  }
  positions.resize(boundary_count);
  std::sort(positions.begin(), positions.end());
  return Segmentation(std::string(phonemes), std::move(positions));
}

}  // namespace segdisc
