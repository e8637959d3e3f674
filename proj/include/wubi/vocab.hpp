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
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace wubi {

inline constexpr const char* kUnknownToken = "<unk>";

/// Frequency-capped token inventory. Entries are ordered by descending
/// count, ties broken by ascending token; coverage is the fraction of all
/// corpus token occurrences whose token was kept.
class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(std::vector<std::pair<std::string, std::uint64_t>> entries,
             std::uint64_t cap, double coverage);

  const std::vector<std::pair<std::string, std::uint64_t>>& entries() const {
    return entries_;
  }
  std::uint64_t cap() const { return cap_; }
  double coverage() const { return coverage_; }
  bool contains(std::string_view token) const {
    return index_.count(std::string(token)) != 0;
  }

  /// `<token>\t<count>` lines in entry order.
  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;

  /// Loads a saved vocabulary. Coverage is not stored in the file and is
  /// reported as 1.0 for loaded vocabularies.
  static Vocabulary load(std::istream& in);
  static Vocabulary load_file(const std::string& path);

 private:
  std::vector<std::pair<std::string, std::uint64_t>> entries_;
  std::unordered_set<std::string> index_;
  std::uint64_t cap_ = 0;
  double coverage_ = 1.0;
};

/// Whitespace token counts for a corpus; merged across inputs by the CLI.
using TokenCounts = std::unordered_map<std::string, std::uint64_t>;

/// Adds one line's tokens to `counts`; returns the number of tokens seen.
std::uint64_t count_tokens(std::string_view line, TokenCounts& counts);

/// Top-`cap` tokens by frequency from precomputed counts.
Vocabulary build_vocab(const TokenCounts& counts, std::uint64_t total_tokens,
                       std::uint64_t cap);

/// Counts a whole corpus stream (one sentence per line) and builds the
/// vocabulary. An empty corpus yields an empty vocabulary with coverage 1.
Vocabulary build_vocab(std::istream& corpus, std::uint64_t cap);

/// Token-wise substitution of out-of-vocabulary tokens by `<unk>`.
std::string apply_vocab(std::string_view sentence, const Vocabulary& vocab);

}  // namespace wubi
