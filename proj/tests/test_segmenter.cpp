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

#include <doctest.h>

#include <random>
#include <sstream>

#include "wubi/errors.hpp"
#include "wubi/segmenter.hpp"
#include "wubi/unicode.hpp"

using namespace wubi;

namespace {

Lexicon lex(const std::string& text) {
  std::istringstream in(text);
  return load_lexicon(in);
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (const char c : text) {
    if (c != ' ') out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("segmenter");

TEST_CASE("forward maximum matching prefers the longest word") {
  const Lexicon lexicon = lex("人权\n问题\n人\n");
  CHECK(segment("人权问题", lexicon) == "人权 问题");
}

TEST_CASE("empty lexicon falls back to single characters") {
  CHECK(segment("承诺", Lexicon{}) == "承 诺");
}

TEST_CASE("script boundaries split non-CJK runs") {
  const Lexicon lexicon = lex("人权\n问题\n");
  CHECK(segment("人权abc问题", lexicon) == "人权 abc 问题");
  CHECK(segment("abc123", Lexicon{}) == "abc 123");
  CHECK(segment("G20峰会", Lexicon{}) == "G 20 峰 会");
}

TEST_CASE("punctuation is always its own token") {
  const Lexicon lexicon = lex("人权\n");
  CHECK(segment("人权。问题", lexicon) == "人权 。 问 题");
  CHECK(segment("a.b", Lexicon{}) == "a . b");
  CHECK(segment("——", Lexicon{}) == "— —");
}

TEST_CASE("whitespace acts as a boundary and is dropped") {
  const Lexicon lexicon = lex("人权\n");
  CHECK(segment("人权 问题", lexicon) == "人权 问 题");
  CHECK(segment("  ", lexicon) == "");
  CHECK(segment("", lexicon) == "");
}

TEST_CASE("greedy matching does not reconsider earlier choices") {
  // FMM takes 中国 then 人 even though 中 国人 would also tile the string.
  const Lexicon lexicon = lex("中国\n国人\n");
  CHECK(segment("中国人", lexicon) == "中国 人");
}

TEST_CASE("load_lexicon deduplicates and tracks the longest word") {
  const Lexicon lexicon = lex("人权\n人权\n发达国家\n# note\n\n");
  CHECK(lexicon.words.size() == 2);
  CHECK(lexicon.max_len == 4);
  CHECK(lex("").words.empty());
  CHECK(lex("").max_len == 0);
}

TEST_CASE("load_lexicon rejects malformed entries") {
  CHECK_THROWS_AS(lex("人 权\n"), ParseError);   // embedded whitespace
  CHECK_THROWS_AS(lex("人权abc\n"), ParseError);  // non-CJK content
  CHECK_THROWS_AS(lex("\xE8\xAE\n"), ParseError);  // invalid UTF-8
  try {
    lex("人权\n人 权\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("concatenation identity and determinism on random input") {
  const Lexicon lexicon = lex("人权\n问题\n发达国家\n中国\n国人\n");
  const std::u32string pool = U"人权问题发达国家中这abz019。，—·";
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> len(0, 30);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 500; ++i) {
    std::string input;
    const std::size_t n = len(rng);
    for (std::size_t j = 0; j < n; ++j) append_utf8(pool[pick(rng)], input);
    CAPTURE(input);
    const std::string tokens = segment(input, lexicon);
    CHECK(strip_spaces(tokens) == input);
    CHECK(segment(input, lexicon) == tokens);
  }
}

TEST_CASE("greedy dominance: no token extends into a longer lexicon word") {
  const Lexicon lexicon = lex("人权\n问题\n发达国家\n中国\n国人\n发达\n");
  const std::u32string pool = U"人权问题发达国家中国人ab。";
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> len(1, 20);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 300; ++i) {
    std::u32string input;
    const std::size_t n = len(rng);
    for (std::size_t j = 0; j < n; ++j) input.push_back(pool[pick(rng)]);
    std::string utf8;
    for (const char32_t s : input) append_utf8(s, utf8);

    std::istringstream split(segment(utf8, lexicon));
    std::string token;
    std::size_t position = 0;  // in scalars
    while (split >> token) {
      const std::size_t token_len = scalar_count(token);
      for (std::size_t longer = token_len + 1;
           longer <= lexicon.max_len && position + longer <= input.size();
           ++longer) {
        const std::u32string candidate = input.substr(position, longer);
        CAPTURE(token);
        CHECK_FALSE(lexicon.contains(candidate));
      }
      position += token_len;
    }
    CHECK(position == input.size());
  }
}

TEST_SUITE_END();
