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

#include "wubi/bootstrap.hpp"

#include <random>

#include "wubi/bleu.hpp"
#include "wubi/errors.hpp"

namespace wubi {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

SignificanceResult paired_bootstrap(const std::vector<std::string>& hyp_a,
                                    const std::vector<std::string>& hyp_b,
                                    const std::vector<std::string>& references,
                                    std::uint64_t samples, std::uint64_t seed) {
  const std::size_t n = references.size();
  if (hyp_a.size() != n || hyp_b.size() != n) {
    throw Error("bootstrap inputs differ in length (" +
                std::to_string(hyp_a.size()) + ", " +
                std::to_string(hyp_b.size()) + ", " + std::to_string(n) + ")");
  }
  if (n == 0) throw Error("bootstrap needs a non-empty corpus");

  // Precompute per-sentence integer statistics once; every resample is then
  // a plain sum over drawn indices.
  std::vector<SentenceNgramStats> stats_a(n);
  std::vector<SentenceNgramStats> stats_b(n);
  SentenceNgramStats full_a;
  SentenceNgramStats full_b;
  for (std::size_t i = 0; i < n; ++i) {
    const auto ref = split_tokens(references[i]);
    stats_a[i] = sentence_ngram_stats(split_tokens(hyp_a[i]), ref);
    stats_b[i] = sentence_ngram_stats(split_tokens(hyp_b[i]), ref);
    full_a.add(stats_a[i]);
    full_b.add(stats_b[i]);
  }

  std::uint64_t b_wins_or_ties = 0;
  for (std::uint64_t k = 0; k < samples; ++k) {
    // One engine per resample keyed by (seed, k): the draw sequence does
    // not depend on how resamples are scheduled.
    std::mt19937_64 engine(splitmix64(seed ^ splitmix64(k)));
    SentenceNgramStats sums_a;
    SentenceNgramStats sums_b;
    for (std::size_t draw = 0; draw < n; ++draw) {
      // Plain modulo keeps the stream identical across standard libraries;
      // the bias is immaterial at corpus sizes.
      const std::size_t index = static_cast<std::size_t>(engine() % n);
      sums_a.add(stats_a[index]);
      sums_b.add(stats_b[index]);
    }
    if (bleu_from_sums(sums_b) >= bleu_from_sums(sums_a)) ++b_wins_or_ties;
  }

  SignificanceResult result;
  result.samples = samples;
  result.seed = seed;
  result.bleu_a = bleu_from_sums(full_a);
  result.bleu_b = bleu_from_sums(full_b);
  result.delta = result.bleu_a - result.bleu_b;
  result.p_value = static_cast<double>(b_wins_or_ties + 1) /
                   static_cast<double>(samples + 1);
  return result;
}

}  // namespace wubi
