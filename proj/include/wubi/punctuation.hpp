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
#include <optional>
#include <string>
#include <unordered_map>

namespace wubi {

/// Bijective Chinese punctuation <-> ASCII substitution.
///
/// Each Chinese mark maps to a 1-2 character ASCII form; where two marks
/// would claim the same natural ASCII target, the second claimant gets a
/// backslash-prefixed two-character form so the mapping stays invertible.
class PunctuationMap {
 public:
  /// The map shipped with the toolkit (also mirrored in data/punct_map.tsv):
  ///   。.  ，,  、\,  ？?  ！!  ：:  ；;  （(  ）)  《<  》>
  ///   “"  ”\"  ‘'  ’\'  —-  …\.
  static PunctuationMap builtin();

  /// Loads a map from `<mark>\t<ascii-form>` lines (same framing rules as
  /// the Wubi table: `#` comments, blank lines skipped). Throws ParseError
  /// on malformed lines or bijectivity violations.
  static PunctuationMap load(std::istream& in);
  static PunctuationMap load_file(const std::string& path);

  /// ASCII form for a Chinese mark, or nullopt if the mark is unmapped.
  std::optional<std::string> to_ascii(char32_t mark) const;

  /// Chinese mark for an ASCII form, or nullopt.
  std::optional<char32_t> to_mark(const std::string& ascii_form) const;

  bool contains_mark(char32_t mark) const { return forward_.count(mark) != 0; }
  bool contains_form(const std::string& form) const {
    return reverse_.count(form) != 0;
  }
  std::size_t size() const { return forward_.size(); }

  const std::unordered_map<char32_t, std::string>& pairs() const {
    return forward_;
  }

 private:
  void insert(char32_t mark, std::string form, std::size_t line_no);

  std::unordered_map<char32_t, std::string> forward_;
  std::unordered_map<std::string, char32_t> reverse_;
};

}  // namespace wubi
