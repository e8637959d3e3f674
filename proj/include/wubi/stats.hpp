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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace wubi {

/// Mean and population standard deviation (divisor N).
struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

/// Descriptive corpus statistics: token counts per sentence, scalar counts
/// per word occurrence, and scalar counts per sentence (separating spaces
/// excluded).
struct CorpusStats {
  MeanStd words_per_sentence;
  MeanStd chars_per_word;
  MeanStd chars_per_sentence;
  std::uint64_t sentence_count = 0;
};

/// Streaming accumulator so corpora never need to be held in memory.
class StatsAccumulator {
 public:
  void add_sentence(std::string_view line);
  CorpusStats finish() const;  // throws Error on an empty corpus

 private:
  std::uint64_t sentences_ = 0;
  std::uint64_t words_ = 0;
  std::uint64_t word_chars_ = 0;            // sum of per-word scalar counts
  unsigned long long words_sq_ = 0;         // sum of squared per-sentence words
  unsigned long long word_chars_sq_ = 0;    // sum of squared per-word scalars
  unsigned long long sent_chars_ = 0;       // sum of per-sentence scalars
  unsigned long long sent_chars_sq_ = 0;
};

/// One-shot helper over a stream (one sentence per line).
CorpusStats corpus_stats(std::istream& corpus);

/// Mean/std of per-sentence word counts. Throws Error on an empty stream.
MeanStd output_length_stats(const std::vector<std::string>& hypotheses);

}  // namespace wubi
