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

#include "wubi/bleu.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "wubi/errors.hpp"
#include "wubi/unicode.hpp"

namespace wubi {

namespace {

// n-grams are keyed by tokens joined with an unlikely separator byte.
constexpr char kNgramSep = '\x1f';

using NgramCounts = std::unordered_map<std::string, std::uint64_t>;

NgramCounts ngram_counts(const std::vector<std::string>& tokens, std::size_t n) {
  NgramCounts counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key;
    for (std::size_t j = 0; j < n; ++j) {
      if (j) key.push_back(kNgramSep);
      key += tokens[i + j];
    }
    ++counts[key];
  }
  return counts;
}

}  // namespace

void SentenceNgramStats::add(const SentenceNgramStats& other) {
  for (std::size_t n = 0; n < kBleuOrder; ++n) {
    matches[n] += other.matches[n];
    totals[n] += other.totals[n];
  }
  hyp_len += other.hyp_len;
  ref_len += other.ref_len;
}

std::vector<std::string> split_tokens(std::string_view sentence) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (start < sentence.size()) {
    while (start < sentence.size() && sentence[start] == ' ') ++start;
    if (start >= sentence.size()) break;
    std::size_t end = start;
    while (end < sentence.size() && sentence[end] != ' ') ++end;
    tokens.emplace_back(sentence.substr(start, end - start));
    start = end;
  }
  return tokens;
}

SentenceNgramStats sentence_ngram_stats(const std::vector<std::string>& hyp,
                                        const std::vector<std::string>& ref) {
  SentenceNgramStats stats;
  stats.hyp_len = hyp.size();
  stats.ref_len = ref.size();
  for (std::size_t n = 1; n <= kBleuOrder; ++n) {
    if (hyp.size() < n) break;
    stats.totals[n - 1] = hyp.size() - n + 1;
    const NgramCounts hyp_counts = ngram_counts(hyp, n);
    const NgramCounts ref_counts = ngram_counts(ref, n);
    std::uint64_t clipped = 0;
    for (const auto& [gram, count] : hyp_counts) {
      const auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) clipped += std::min(count, it->second);
    }
    stats.matches[n - 1] = clipped;
  }
  return stats;
}

double bleu_from_sums(const SentenceNgramStats& sums,
                      std::array<double, kBleuOrder>* precisions,
                      double* brevity_penalty) {
  double log_sum = 0.0;
  std::size_t defined = 0;
  bool zero_precision = false;
  for (std::size_t n = 0; n < kBleuOrder; ++n) {
    double p = 0.0;
    if (sums.totals[n] > 0) {
      ++defined;
      p = static_cast<double>(sums.matches[n]) /
          static_cast<double>(sums.totals[n]);
      if (p > 0.0) {
        log_sum += std::log(p);
      } else {
        zero_precision = true;
      }
    }
    if (precisions) (*precisions)[n] = p;
  }

  double bp = 1.0;
  if (sums.hyp_len == 0) {
    bp = 0.0;
  } else if (sums.hyp_len < sums.ref_len) {
    bp = std::exp(1.0 - static_cast<double>(sums.ref_len) /
                            static_cast<double>(sums.hyp_len));
  }
  if (brevity_penalty) *brevity_penalty = bp;

  if (defined == 0 || zero_precision || sums.hyp_len == 0) return 0.0;
  return bp * std::exp(log_sum / static_cast<double>(defined)) * 100.0;
}

double sentence_bleu(const SentenceNgramStats& stats) {
  if (stats.totals[0] == 0) return 0.0;  // empty hypothesis
  const double p1 = static_cast<double>(stats.matches[0]) /
                    static_cast<double>(stats.totals[0]);
  if (p1 == 0.0) return 0.0;
  double log_sum = std::log(p1);
  for (std::size_t n = 1; n < kBleuOrder; ++n) {
    log_sum += std::log(static_cast<double>(stats.matches[n] + 1) /
                        static_cast<double>(stats.totals[n] + 1));
  }
  double bp = 1.0;
  if (stats.hyp_len < stats.ref_len) {
    bp = std::exp(1.0 - static_cast<double>(stats.ref_len) /
                            static_cast<double>(stats.hyp_len));
  }
  return bp * std::exp(log_sum / static_cast<double>(kBleuOrder)) * 100.0;
}

BleuReport corpus_bleu(const std::vector<std::string>& hypotheses,
                       const std::vector<std::string>& references,
                       const std::vector<std::uint64_t>* source_lengths,
                       std::uint64_t bin_width) {
  if (hypotheses.size() != references.size()) {
    throw Error("hypothesis/reference length mismatch: " +
                std::to_string(hypotheses.size()) + " vs " +
                std::to_string(references.size()));
  }
  if (source_lengths && source_lengths->size() != hypotheses.size()) {
    throw Error("source length list does not match corpus size");
  }

  BleuReport report;
  report.per_sentence.reserve(hypotheses.size());
  SentenceNgramStats sums;
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    const auto hyp = split_tokens(hypotheses[i]);
    const auto ref = split_tokens(references[i]);
    const SentenceNgramStats stats = sentence_ngram_stats(hyp, ref);
    sums.add(stats);
    const std::uint64_t source_length =
        source_lengths ? (*source_lengths)[i] : stats.ref_len;
    report.per_sentence.push_back({i, source_length, sentence_bleu(stats)});
  }

  report.corpus_bleu =
      bleu_from_sums(sums, &report.precisions, &report.brevity_penalty);
  report.hypothesis_length = sums.hyp_len;
  report.reference_length = sums.ref_len;
  report.bins = length_binned_bleu(report, bin_width);
  return report;
}

std::vector<BleuBin> length_binned_bleu(const BleuReport& report,
                                        std::uint64_t bin_width) {
  if (bin_width == 0) throw Error("bin width must be positive");
  std::map<std::uint64_t, std::pair<double, std::uint64_t>> grouped;
  for (const auto& sentence : report.per_sentence) {
    auto& [sum, count] = grouped[sentence.source_length / bin_width];
    sum += sentence.bleu;
    ++count;
  }
  std::vector<BleuBin> bins;
  bins.reserve(grouped.size());
  for (const auto& [bin_index, acc] : grouped) {
    bins.push_back({bin_index * bin_width, (bin_index + 1) * bin_width,
                    acc.first / static_cast<double>(acc.second), acc.second});
  }
  return bins;
}

std::vector<std::string> normalize_for_bleu(
    const std::vector<std::string>& lines, const WubiTable& table,
    const PunctuationMap& punct, std::vector<std::string>* diagnostics) {
  std::vector<std::string> out;
  out.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (is_ascii(line)) {
      out.push_back(line);
      continue;
    }
    std::vector<Diagnostic> diags;
    out.push_back(
        encode_sentence(line, table, punct, Mode::lenient, &diags).rendering());
    if (diagnostics) {
      for (const auto& diag : diags) {
        diagnostics->push_back("line " + std::to_string(i + 1) + ": " +
                               diag.note + " ('" + diag.subject + "')");
      }
    }
  }
  return out;
}

}  // namespace wubi
