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

#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_set>

namespace wubi {

/// Dictionary for forward maximum matching. Words are CJK-only; any single
/// character is implicitly segmentable as a fallback unit.
struct Lexicon {
  std::unordered_set<std::u32string> words;
  std::size_t max_len = 0;  // longest word, in scalars

  bool contains(const std::u32string& word) const {
    return words.count(word) != 0;
  }
};

/// Loads one word per line (UTF-8, `#` comments and blank lines skipped,
/// duplicates collapse). Throws ParseError on embedded whitespace or
/// non-CJK content.
Lexicon load_lexicon(std::istream& in);
Lexicon load_lexicon_file(const std::string& path);

/// Deterministic word segmentation: forward maximum matching over CJK runs
/// (longest lexicon word at each position, single character as fallback),
/// ASCII letter and digit runs as single tokens split at script boundaries,
/// every other scalar as its own token. Whitespace acts as a boundary and
/// is dropped. Joining the output tokens reproduces the input exactly for
/// whitespace-free input.
std::string segment(std::string_view sentence, const Lexicon& lexicon);

}  // namespace wubi
