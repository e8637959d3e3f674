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
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace wubi {

/// One line of a raw table file: a single CJK ideograph and its base code
/// of 1-5 lowercase letters from the 25-key alphabet (a-y, no z).
struct RawTableEntry {
  char32_t character = 0;
  std::string base_code;

  friend bool operator==(const RawTableEntry&, const RawTableEntry&) = default;
};

/// Bidirectional character<->code mapping after collision disambiguation.
///
/// Characters sharing a base code are ordered by ascending scalar value and
/// get decimal suffixes 0,1,... appended; the bare code is then retired, so
/// every final code decodes to exactly one character. Digits never occur in
/// base codes, which keeps suffixed and bare codes disjoint.
///
/// Immutable after construction; safe to share across threads.
struct WubiTable {
  std::unordered_map<char32_t, std::string> forward;  // char -> final code
  std::unordered_map<std::string, char32_t> reverse;  // final code -> char
  std::map<std::string, std::vector<char32_t>> collision_groups;
};

/// True for `[a-y]{1,5}` (a raw table code, before suffixing).
bool is_valid_base_code(std::string_view code);

/// True for `[a-y]{1,5}[0-9]*` (a disambiguated code).
bool is_valid_final_code(std::string_view code);

/// Parses a table stream: one `<char>\t<code>` entry per line, `#` comments
/// and blank lines skipped. Exact duplicate lines collapse to one entry; a
/// character listed with two different codes is a conflict error. Throws
/// ParseError with the 1-based line number on malformed input.
std::vector<RawTableEntry> load_table(std::istream& in);

/// Convenience wrapper over load_table for a file path.
std::vector<RawTableEntry> load_table_file(const std::string& path);

/// Builds the final bidirectional mapping. Collision groups are suffixed in
/// ascending scalar order starting at 0; suffixes run past 9 as 10, 11, ...
/// Deterministic: the entry order never affects the result.
WubiTable disambiguate(std::vector<RawTableEntry> entries);

/// One table-consistency problem found by validate().
struct TableViolation {
  enum class Kind { injectivity, suffix_rule, alphabet, inverse };
  Kind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<TableViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks a (possibly hand-built) table against the structural rules:
/// forward injective and mirrored by reverse, codes well-formed, and the
/// suffix rule (a code is suffixed iff its base collides, suffixes are
/// exactly 0..n-1, and no bare code coexists with suffixed siblings).
/// Tables produced by disambiguate() always validate clean.
ValidationReport validate(const WubiTable& table);

}  // namespace wubi
