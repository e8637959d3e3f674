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

#include "wubi/vocab.hpp"  // TokenCounts

namespace wubi {

inline constexpr const char* kWordEndMarker = "</w>";

/// Learned byte-pair-encoding model: ordered merge rules plus the resulting
/// symbol inventory (initial scalar alphabet, word-end marker, and one
/// symbol per merge).
struct BpeModel {
  std::vector<std::pair<std::string, std::string>> merges;
  std::unordered_set<std::string> vocab;
  std::size_t target_size = 0;
  std::string word_end_marker = kWordEndMarker;

  /// Writes `#bpe v1 <marker>` followed by one `<left> <right>` merge per
  /// line, in learned order.
  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;

  /// Loads a merges file. The vocab of a loaded model is reconstructed from
  /// the merge rules (merge parts and outputs); corpus-only scalars that
  /// never took part in a merge are not recoverable from the file.
  static BpeModel load(std::istream& in);
  static BpeModel load_file(const std::string& path);
};

/// Learns merges from word frequencies: repeatedly merge the most frequent
/// adjacent symbol pair (ties broken by lexicographically smallest pair)
/// until the symbol inventory would exceed `target_size` or no pair occurs
/// at least twice.
BpeModel bpe_learn(const TokenCounts& word_counts, std::size_t target_size);

/// Counts words in a corpus stream (one sentence per line) and learns.
BpeModel bpe_learn(std::istream& corpus, std::size_t target_size);

/// Applies a learned model to text. Splitting a word replays the merge list
/// (lowest-rank adjacent pair first) over its scalars plus the word-end
/// marker; unseen scalars simply stay unmerged. Subword boundaries are
/// rendered with the trailing `@@` continuation convention.
class BpeApplier {
 public:
  explicit BpeApplier(const BpeModel& model);

  /// Final subword symbols of one word, including the marker on the last.
  std::vector<std::string> split_word(std::string_view word) const;

  /// Visible tokens for one word (`@@` continuations, marker stripped).
  std::vector<std::string> render_word(std::string_view word) const;

  std::string apply_sentence(std::string_view line) const;

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<std::string, std::string>& p) const {
      const std::size_t h1 = std::hash<std::string>{}(p.first);
      const std::size_t h2 = std::hash<std::string>{}(p.second);
      return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
    }
  };

  std::unordered_map<std::pair<std::string, std::string>, std::size_t, PairHash>
      ranks_;
  std::string marker_;
};

/// Inverse of apply_sentence: joins `@@` continuations back into words.
std::string bpe_undo(std::string_view line);

}  // namespace wubi
