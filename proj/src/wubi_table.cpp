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

#include "wubi/wubi_table.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>

#include "wubi/errors.hpp"
#include "wubi/unicode.hpp"

namespace wubi {

namespace {

bool is_code_letter(char c) { return c >= 'a' && c <= 'y'; }

// Splits "xyna0" into ("xyna", "0"). The suffix part may be empty.
std::pair<std::string_view, std::string_view> split_code(std::string_view code) {
  std::size_t i = 0;
  while (i < code.size() && is_code_letter(code[i])) ++i;
  return {code.substr(0, i), code.substr(i)};
}

}  // namespace

bool is_valid_base_code(std::string_view code) {
  if (code.empty() || code.size() > 5) return false;
  return std::all_of(code.begin(), code.end(), is_code_letter);
}

bool is_valid_final_code(std::string_view code) {
  const auto [base, suffix] = split_code(code);
  if (!is_valid_base_code(base)) return false;
  return std::all_of(suffix.begin(), suffix.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

std::vector<RawTableEntry> load_table(std::istream& in) {
  std::vector<RawTableEntry> entries;
  std::unordered_map<char32_t, std::string> seen;  // char -> base_code
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError("expected exactly two tab-separated fields", line_no);
    }
    const std::string char_field = line.substr(0, tab);
    const std::string code_field = line.substr(tab + 1);

    std::size_t pos = 0;
    char32_t character = 0;
    try {
      character = decode_scalar(char_field, pos);
    } catch (const ParseError&) {
      throw ParseError("character field is not valid UTF-8", line_no);
    }
    if (pos != char_field.size() || char_field.empty()) {
      throw ParseError("character field must be exactly one scalar", line_no);
    }
    if (!is_cjk_ideograph(character)) {
      throw ParseError("character '" + char_field + "' is not a CJK ideograph",
                       line_no);
    }
    if (!is_valid_base_code(code_field)) {
      throw ParseError("code '" + code_field +
                           "' is not 1-5 letters from a-y",
                       line_no);
    }

    const auto it = seen.find(character);
    if (it != seen.end()) {
      if (it->second != code_field) {
        throw ParseError("character '" + char_field + "' already has code '" +
                             it->second + "', conflicting '" + code_field + "'",
                         line_no);
      }
      continue;  // exact duplicate line
    }
    seen.emplace(character, code_field);
    entries.push_back({character, code_field});
  }
  return entries;
}

std::vector<RawTableEntry> load_table_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open table file: " + path);
  try {
    return load_table(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

WubiTable disambiguate(std::vector<RawTableEntry> entries) {
  std::map<std::string, std::vector<char32_t>> groups;
  for (const auto& entry : entries) {
    groups[entry.base_code].push_back(entry.character);
  }

  WubiTable table;
  for (auto& [base_code, members] : groups) {
    std::sort(members.begin(), members.end());
    if (members.size() == 1) {
      table.forward.emplace(members[0], base_code);
      table.reverse.emplace(base_code, members[0]);
    } else {
      for (std::size_t i = 0; i < members.size(); ++i) {
        std::string code = base_code + std::to_string(i);
        table.forward.emplace(members[i], code);
        table.reverse.emplace(std::move(code), members[i]);
      }
      table.collision_groups.emplace(base_code, members);
    }
  }
  return table;
}

ValidationReport validate(const WubiTable& table) {
  ValidationReport report;
  const auto add = [&report](TableViolation::Kind kind, std::string message) {
    report.violations.push_back({kind, std::move(message)});
  };

  // Alphabet and shape of every mapping.
  for (const auto& [character, code] : table.forward) {
    if (!is_cjk_ideograph(character)) {
      add(TableViolation::Kind::alphabet,
          "'" + to_utf8(character) + "' is not a CJK ideograph");
    }
    if (!is_valid_final_code(code)) {
      add(TableViolation::Kind::alphabet, "malformed code '" + code + "'");
    }
  }

  // Injectivity of forward, and reverse as its exact mirror.
  std::map<std::string, std::vector<char32_t>> by_code;
  for (const auto& [character, code] : table.forward) {
    by_code[code].push_back(character);
  }
  for (auto& [code, characters] : by_code) {
    if (characters.size() > 1) {
      std::sort(characters.begin(), characters.end());
      std::string who;
      for (const char32_t c : characters) who += to_utf8(c);
      add(TableViolation::Kind::injectivity,
          "code '" + code + "' maps from multiple characters: " + who);
    }
  }
  if (table.reverse.size() != table.forward.size()) {
    add(TableViolation::Kind::inverse,
        "forward has " + std::to_string(table.forward.size()) +
            " entries but reverse has " + std::to_string(table.reverse.size()));
  }
  for (const auto& [character, code] : table.forward) {
    const auto it = table.reverse.find(code);
    if (it == table.reverse.end() || it->second != character) {
      add(TableViolation::Kind::inverse,
          "reverse['" + code + "'] does not round-trip '" + to_utf8(character) +
              "'");
    }
  }

  // Suffix rule: group final codes by their letter part.
  struct BaseGroup {
    bool bare = false;
    std::set<long> suffixes;
  };
  std::map<std::string, BaseGroup> bases;
  for (const auto& [code, character] : table.reverse) {
    (void)character;
    if (!is_valid_final_code(code)) continue;  // reported above
    const auto [base, suffix] = split_code(code);
    auto& group = bases[std::string(base)];
    if (suffix.empty()) {
      group.bare = true;
    } else {
      group.suffixes.insert(std::stol(std::string(suffix)));
    }
  }
  for (const auto& [base, group] : bases) {
    if (group.suffixes.empty()) continue;
    if (group.bare) {
      add(TableViolation::Kind::suffix_rule,
          "bare code '" + base + "' coexists with suffixed forms");
    }
    if (group.suffixes.size() < 2 && !group.bare) {
      add(TableViolation::Kind::suffix_rule,
          "code '" + base + "' is suffixed but has no collision sibling");
    }
    long expected = 0;
    for (const long suffix : group.suffixes) {
      if (suffix != expected) {
        add(TableViolation::Kind::suffix_rule,
            "suffixes of '" + base + "' are not exactly 0.." +
                std::to_string(group.suffixes.size() - 1));
        break;
      }
      ++expected;
    }
  }

  return report;
}

}  // namespace wubi
