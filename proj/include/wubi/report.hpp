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

#include <string>

#include <json.hpp>

#include "wubi/bleu.hpp"
#include "wubi/bootstrap.hpp"
#include "wubi/stats.hpp"
#include "wubi/vocab.hpp"

namespace wubi {

// Machine-readable report schema (see README for field documentation).
// These are the payloads the CLI writes with --report.

nlohmann::json to_json(const BleuReport& report);
nlohmann::json to_json(const SignificanceResult& result);
nlohmann::json to_json(const CorpusStats& stats);

/// Vocabulary summary (size, cap, coverage) rather than the full entry
/// list, which lives in the vocabulary file itself.
nlohmann::json vocab_summary_json(const Vocabulary& vocab,
                                  std::uint64_t total_tokens);

// Aligned human-readable summaries for stdout.

std::string human_summary(const BleuReport& report);
std::string human_summary(const SignificanceResult& result);
std::string human_summary(const CorpusStats& stats);

/// `<bin_start>\t<bin_end>\t<mean_bleu>\t<count>` lines for plotting.
std::string bins_tsv(const std::vector<BleuBin>& bins);

}  // namespace wubi
