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

#include "wubi/segmenter.hpp"

#include <fstream>
#include <istream>
#include <vector>

#include "wubi/errors.hpp"
#include "wubi/unicode.hpp"

namespace wubi {

namespace {

bool is_space_char(char32_t s) {
  return s == U' ' || s == U'\t' || s == U'\r' || s == U'\v' || s == U'\f';
}

enum class Script { cjk, latin, digit, space, other };

Script script_of(char32_t s) {
  if (is_cjk_ideograph(s)) return Script::cjk;
  if ((s >= U'a' && s <= U'z') || (s >= U'A' && s <= U'Z')) return Script::latin;
  if (s >= U'0' && s <= U'9') return Script::digit;
  if (is_space_char(s)) return Script::space;
  return Script::other;
}

}  // namespace

Lexicon load_lexicon(std::istream& in) {
  Lexicon lexicon;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    std::u32string word;
    std::size_t pos = 0;
    while (pos < line.size()) {
      char32_t scalar = 0;
      try {
        scalar = decode_scalar(line, pos);
      } catch (const ParseError&) {
        throw ParseError("lexicon entry is not valid UTF-8", line_no);
      }
      if (is_space_char(scalar)) {
        throw ParseError("whitespace inside lexicon word '" + line + "'",
                         line_no);
      }
      if (!is_cjk_ideograph(scalar)) {
        throw ParseError("non-CJK character in lexicon word '" + line + "'",
                         line_no);
      }
      word.push_back(scalar);
    }
    lexicon.max_len = std::max(lexicon.max_len, word.size());
    lexicon.words.insert(std::move(word));
  }
  return lexicon;
}

Lexicon load_lexicon_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open lexicon file: " + path);
  try {
    return load_lexicon(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string segment(std::string_view sentence, const Lexicon& lexicon) {
  const std::vector<char32_t> scalars = to_scalars(sentence);
  std::vector<std::u32string> tokens;

  std::size_t i = 0;
  while (i < scalars.size()) {
    const Script script = script_of(scalars[i]);
    if (script == Script::space) {
      ++i;
      continue;
    }
    if (script == Script::latin || script == Script::digit) {
      std::u32string run;
      while (i < scalars.size() && script_of(scalars[i]) == script) {
        run.push_back(scalars[i++]);
      }
      tokens.push_back(std::move(run));
      continue;
    }
    if (script == Script::other) {
      tokens.push_back(std::u32string(1, scalars[i++]));
      continue;
    }

    // CJK run: forward maximum matching within the run.
    std::size_t run_end = i;
    while (run_end < scalars.size() && script_of(scalars[run_end]) == Script::cjk) {
      ++run_end;
    }
    while (i < run_end) {
      const std::size_t window = std::min(lexicon.max_len, run_end - i);
      std::size_t taken = 1;
      for (std::size_t len = window; len >= 2; --len) {
        if (lexicon.contains(std::u32string(scalars.begin() + i,
                                            scalars.begin() + i + len))) {
          taken = len;
          break;
        }
      }
      tokens.push_back(std::u32string(scalars.begin() + i,
                                      scalars.begin() + i + taken));
      i += taken;
    }
  }

  std::string out;
  for (const auto& token : tokens) {
    if (!out.empty()) out.push_back(' ');
    for (const char32_t s : token) append_utf8(s, out);
  }
  return out;
}

}  // namespace wubi
