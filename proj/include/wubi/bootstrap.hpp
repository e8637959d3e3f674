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
#include <string>
#include <vector>

namespace wubi {

inline constexpr std::uint64_t kDefaultBootstrapSamples = 1500;
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Paired bootstrap outcome for "system B is at least as good as system A".
struct SignificanceResult {
  double p_value = 1.0;  // (#resamples with BLEU(B) >= BLEU(A) + 1)/(samples + 1)
  std::uint64_t samples = 0;
  double delta = 0.0;  // corpus BLEU(A) - corpus BLEU(B) on the full corpus
  std::uint64_t seed = 0;
  double bleu_a = 0.0;
  double bleu_b = 0.0;

  friend bool operator==(const SignificanceResult&,
                         const SignificanceResult&) = default;
};

/// Paired bootstrap resampling: draws `samples` resamples of sentence
/// indices with replacement (resample size = corpus size), scores both
/// systems on each resample, and counts how often B ties or beats A (ties
/// count for B, which keeps the estimate conservative). The RNG stream for
/// each resample is derived from (seed, resample index), so results are
/// bit-identical for a given seed regardless of execution order.
/// Throws Error when the three corpora differ in length or are empty.
SignificanceResult paired_bootstrap(const std::vector<std::string>& hyp_a,
                                    const std::vector<std::string>& hyp_b,
                                    const std::vector<std::string>& references,
                                    std::uint64_t samples = kDefaultBootstrapSamples,
                                    std::uint64_t seed = kDefaultSeed);

}  // namespace wubi
