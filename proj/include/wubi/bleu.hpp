// Copyright 2026 The Wubikit Authors
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

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wubi/codec.hpp"

namespace wubi {

inline constexpr std::size_t kBleuOrder = 4;
inline constexpr std::uint64_t kDefaultBinWidth = 4;

/// Integer sufficient statistics of one hypothesis/reference pair: clipped
/// n-gram matches and totals for n = 1..4 plus both lengths. Corpus scores
/// and bootstrap resamples are pure sums of these, which makes every
/// aggregate independent of sentence order and thread count.
struct SentenceNgramStats {
  std::array<std::uint64_t, kBleuOrder> matches{};
  std::array<std::uint64_t, kBleuOrder> totals{};
  std::uint64_t hyp_len = 0;
  std::uint64_t ref_len = 0;

  void add(const SentenceNgramStats& other);
};

struct SentenceScore {
  std::size_t index;
  std::uint64_t source_length;  // in words
  double bleu;
};

struct BleuBin {
  std::uint64_t start;  // inclusive
  std::uint64_t end;    // exclusive
  double mean_bleu;
  std::uint64_t count;
};

struct BleuReport {
  double corpus_bleu = 0.0;
  std::array<double, kBleuOrder> precisions{};
  double brevity_penalty = 1.0;
  std::uint64_t hypothesis_length = 0;
  std::uint64_t reference_length = 0;
  std::vector<SentenceScore> per_sentence;
  std::vector<BleuBin> bins;
};

/// Splits a sentence into its space-separated tokens.
std::vector<std::string> split_tokens(std::string_view sentence);

/// Clipped n-gram statistics for one sentence pair.
SentenceNgramStats sentence_ngram_stats(const std::vector<std::string>& hyp,
                                        const std::vector<std::string>& ref);

/// Corpus-level BLEU (0..100) from summed statistics: brevity penalty times
/// the geometric mean of the modified precisions. Orders with no n-grams at
/// all are left out of the mean so that a perfect short corpus still scores
/// 100; any defined order with zero matches drives the score to 0 (no
/// corpus-level smoothing).
double bleu_from_sums(const SentenceNgramStats& sums,
                      std::array<double, kBleuOrder>* precisions = nullptr,
                      double* brevity_penalty = nullptr);

/// Sentence-level BLEU with add-one smoothing for n >= 2, so short
/// sentences still get a defined score. An empty hypothesis scores 0.
double sentence_bleu(const SentenceNgramStats& stats);

/// Scores a hypothesis corpus against an equally long reference corpus.
/// `source_lengths`, when given, supplies the per-sentence source word
/// counts used for length binning; otherwise reference lengths stand in.
/// Throws Error on a length mismatch.
BleuReport corpus_bleu(const std::vector<std::string>& hypotheses,
                       const std::vector<std::string>& references,
                       const std::vector<std::uint64_t>* source_lengths = nullptr,
                       std::uint64_t bin_width = kDefaultBinWidth);

/// Groups per-sentence scores into [k*w, (k+1)*w) source-length bins.
/// Only non-empty bins are returned. Throws Error when bin_width is 0.
std::vector<BleuBin> length_binned_bleu(const BleuReport& report,
                                        std::uint64_t bin_width);

/// Encodes Chinese-side lines to Wubi (lenient mode) so Chinese-producing
/// and Wubi-producing systems are scored in one space. Lines that are
/// already pure ASCII pass through unchanged. Unencodable characters are
/// kept as-is and reported via `diagnostics` as "line N: ..." strings.
std::vector<std::string> normalize_for_bleu(
    const std::vector<std::string>& lines, const WubiTable& table,
    const PunctuationMap& punct, std::vector<std::string>* diagnostics = nullptr);

}  // namespace wubi
