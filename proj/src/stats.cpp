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

#include "wubi/stats.hpp"

#include <cmath>
#include <istream>

#include "wubi/errors.hpp"
#include "wubi/unicode.hpp"

namespace wubi {

namespace {

// Population statistics from integer sums, exact up to the final division.
MeanStd from_sums(unsigned long long sum, unsigned long long sum_sq,
                  std::uint64_t n) {
  if (n == 0) return {0.0, 0.0};
  const double mean = static_cast<double>(sum) / static_cast<double>(n);
  const double var =
      static_cast<double>(sum_sq) / static_cast<double>(n) - mean * mean;
  return {mean, std::sqrt(std::max(0.0, var))};
}

}  // namespace

void StatsAccumulator::add_sentence(std::string_view line) {
  ++sentences_;
  std::uint64_t words_in_sentence = 0;
  std::uint64_t chars_in_sentence = 0;

  std::size_t start = 0;
  while (start < line.size()) {
    while (start < line.size() && line[start] == ' ') ++start;
    if (start >= line.size()) break;
    std::size_t end = start;
    while (end < line.size() && line[end] != ' ') ++end;
    const std::uint64_t chars = scalar_count(line.substr(start, end - start));
    ++words_in_sentence;
    word_chars_ += chars;
    word_chars_sq_ += chars * chars;
    chars_in_sentence += chars;
    start = end;
  }

  words_ += words_in_sentence;
  words_sq_ += words_in_sentence * words_in_sentence;
  sent_chars_ += chars_in_sentence;
  sent_chars_sq_ += chars_in_sentence * chars_in_sentence;
}

CorpusStats StatsAccumulator::finish() const {
  if (sentences_ == 0) throw Error("statistics undefined for an empty corpus");
  CorpusStats stats;
  stats.sentence_count = sentences_;
  stats.words_per_sentence = from_sums(words_, words_sq_, sentences_);
  stats.chars_per_word = from_sums(word_chars_, word_chars_sq_, words_);
  stats.chars_per_sentence = from_sums(sent_chars_, sent_chars_sq_, sentences_);
  return stats;
}

CorpusStats corpus_stats(std::istream& corpus) {
  StatsAccumulator acc;
  std::string line;
  while (std::getline(corpus, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    acc.add_sentence(line);
  }
  return acc.finish();
}

MeanStd output_length_stats(const std::vector<std::string>& hypotheses) {
  if (hypotheses.empty()) throw Error("word-count statistics need a non-empty stream");
  unsigned long long sum = 0;
  unsigned long long sum_sq = 0;
  for (const auto& line : hypotheses) {
    std::uint64_t words = 0;
    std::size_t start = 0;
    while (start < line.size()) {
      while (start < line.size() && line[start] == ' ') ++start;
      if (start >= line.size()) break;
      while (start < line.size() && line[start] != ' ') ++start;
      ++words;
    }
    sum += words;
    sum_sq += words * words;
  }
  const double mean = static_cast<double>(sum) / hypotheses.size();
  const double var = static_cast<double>(sum_sq) / hypotheses.size() - mean * mean;
  return {mean, std::sqrt(std::max(0.0, var))};
}

}  // namespace wubi
