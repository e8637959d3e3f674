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

#include <set>
#include <sstream>

#include "generators.hpp"
#include "wubi/codec.hpp"
#include "wubi/errors.hpp"
#include "wubi/unicode.hpp"

using namespace wubi;

namespace {

const WubiTable& table() { return testgen::fixture_table(); }

const PunctuationMap& punct() {
  static const PunctuationMap map = PunctuationMap::builtin();
  return map;
}

std::string enc(std::string_view sentence, Mode mode = Mode::strict,
                std::vector<Diagnostic>* diags = nullptr) {
  return encode_sentence(sentence, table(), punct(), mode, diags).rendering();
}

std::string dec(std::string_view rendering, Mode mode = Mode::strict,
                std::vector<Diagnostic>* diags = nullptr) {
  return decode_sentence(rendering, table(), punct(), mode, diags);
}

}  // namespace

TEST_SUITE_BEGIN("codec");

TEST_CASE("encode_char looks up final codes") {
  CHECK(encode_char(U'设', table()) == "ymc");
  CHECK(encode_char(U'哈', table()) == "kwgk");
  CHECK(encode_char(U'问', table()) == "ukd0");
  CHECK_THROWS_AS(encode_char(U'猫', table()), EncodeError);
}

TEST_CASE("encode_word joins per-character codes with bars") {
  CHECK(encode_word("承诺", table()).surface == "bd|yad");
  CHECK(encode_word("让开", table()).surface == "yh|ga");
  CHECK(encode_word("公共财产", table()).surface == "wc|aw|mf|u");
  CHECK(encode_word("人", table()).surface == "w");

  try {
    encode_word("承猫", table());
    FAIL("expected EncodeError");
  } catch (const EncodeError& e) {
    CHECK(e.character() == "猫");
    CHECK(e.token_index() == 1);  // scalar position inside the word
  }
}

TEST_CASE("encode_sentence reproduces the reference sentence") {
  CHECK(enc("社会 与 人权 问题") == "py|wf gn w|sc ukd0|jghm1");
}

TEST_CASE("punctuation tokens map to ASCII forms") {
  CHECK(enc("。") == ".");
  CHECK(enc("《") == "<");
  CHECK(enc("承诺 。") == "bd|yad .");
  CHECK(normalize_punctuation(U'。', punct()) == ".");
  CHECK(normalize_punctuation(U'、', punct()) == "\\,");
  CHECK(denormalize_punctuation(".", punct()) == "。");
}

TEST_CASE("normalize/denormalize are inverse over the whole map") {
  for (const auto& [mark, form] : punct().pairs()) {
    CHECK(normalize_punctuation(mark, punct()) == form);
    CHECK(denormalize_punctuation(form, punct()) == to_utf8(mark));
  }
  // Unmapped marks pass through unchanged in both directions.
  CHECK(normalize_punctuation(U'·', punct()) == "·");
  CHECK(denormalize_punctuation("~", punct()) == "~");
}

TEST_CASE("passthrough escape rule") {
  CHECK(enc("1995") == "1995");    // digit-initial cannot parse as Wubi
  CHECK(enc("z9") == "z9");        // 'z' is outside the key alphabet
  CHECK(enc("sk") == "^sk");       // would parse as a Wubi code
  CHECK(enc("xyna0") == "^xyna0");  // suffixed lookalike
  CHECK(enc("bd|yad") == "^bd|yad");
  CHECK(enc("a||b") == "^a||b");   // any '|' is escaped
  CHECK(enc("^x") == "^^x");
  CHECK(enc("^") == "^^");
  CHECK(enc(".") == "^.");         // collides with the form of 。
  CHECK(enc("\\,") == "^\\,");     // collides with the form of 、
  CHECK(enc("<unk>") == "<unk>");  // no collision: not a whole-token form
}

TEST_CASE("strict mode rejects what it cannot represent losslessly") {
  CHECK_THROWS_AS(enc("猫"), EncodeError);        // unknown ideograph
  CHECK_THROWS_AS(enc("承x"), EncodeError);       // mixed script token
  CHECK_THROWS_AS(enc("。。"), EncodeError);      // multi-mark token
  CHECK_THROWS_AS(enc("é"), EncodeError);         // unmappable non-ASCII
  CHECK_THROWS_AS(enc("a  b"), EncodeError);      // irregular spacing
  CHECK_THROWS_AS(enc(" a"), EncodeError);
  CHECK_THROWS_AS(enc("a "), EncodeError);
  CHECK_THROWS_AS(enc("a\tb"), EncodeError);
  try {
    enc("承诺 猫");
  } catch (const EncodeError& e) {
    CHECK(e.token_index() == 1);
    CHECK(e.character() == "猫");
  }
}

TEST_CASE("lenient mode splits mixed tokens by scalar class") {
  CHECK(enc("人权abc问题", Mode::lenient) == "w|sc ^abc ukd0|jghm1");
  CHECK(enc("承诺。", Mode::lenient) == "bd|yad .");
  CHECK(enc("承1995诺", Mode::lenient) == "bd 1995 yad");
  CHECK(enc("。。", Mode::lenient) == ". .");
  CHECK(enc("  a   b ", Mode::lenient) == "a b");  // whitespace collapsed
}

TEST_CASE("lenient mode passes unknowns through and reports them") {
  std::vector<Diagnostic> diags;
  CHECK(enc("承猫诺", Mode::lenient, &diags) == "bd 猫 yad");
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].subject == "猫");

  diags.clear();
  CHECK(enc("·", Mode::lenient, &diags) == "·");  // unmapped mark
  CHECK(diags.size() == 1);

  diags.clear();
  CHECK(enc("猫", Mode::lenient, &diags) == "猫");
  CHECK(diags.size() == 1);
}

TEST_CASE("decode inverts every token class") {
  CHECK(dec("bd|yad") == "承诺");
  CHECK(dec("w") == "人");
  CHECK(dec("ukd0|jghm1") == "问题");
  CHECK(dec("^sk") == "sk");
  CHECK(dec("^^x") == "^x");
  CHECK(dec(".") == "。");
  CHECK(dec("\\,") == "、");
  CHECK(dec("1995") == "1995");
  CHECK(dec("<unk>") == "<unk>");
  CHECK(dec("py|wf gn w|sc ukd0|jghm1") == "社会 与 人权 问题");
}

TEST_CASE("decode errors carry the token and code") {
  try {
    dec("bd|xxx");
    FAIL("expected DecodeError");
  } catch (const DecodeError& e) {
    CHECK(e.token() == "bd|xxx");
    CHECK(e.code() == "xxx");
  }
  CHECK_THROWS_AS(dec("ab|"), DecodeError);   // malformed '|' placement
  CHECK_THROWS_AS(dec("|ab"), DecodeError);
  CHECK_THROWS_AS(dec("a||b"), DecodeError);
  CHECK_THROWS_AS(dec("^"), DecodeError);     // dangling escape
}

TEST_CASE("lenient decode keeps problem tokens and reports them") {
  std::vector<Diagnostic> diags;
  CHECK(dec("bd|xxx ab| ^", Mode::lenient, &diags) == "bd|xxx ab| ^");
  CHECK(diags.size() == 3);
}

TEST_CASE("round trip over generated strict-valid sentences") {
  testgen::StrictSentenceGen gen(table(), punct(), 20260809);
  for (int i = 0; i < 2000; ++i) {
    const std::string sentence = gen.sentence();
    CAPTURE(sentence);
    const std::string rendering = enc(sentence);
    REQUIRE(dec(rendering) == sentence);
    CHECK(is_ascii(rendering));  // strict output is pure ASCII
  }
}

TEST_CASE("encode is injective on generated sentences") {
  testgen::StrictSentenceGen gen(table(), punct(), 99);
  std::set<std::string> inputs;
  std::set<std::string> outputs;
  for (int i = 0; i < 1000; ++i) {
    const std::string sentence = gen.sentence();
    if (!inputs.insert(sentence).second) continue;
    CHECK(outputs.insert(enc(sentence)).second);
  }
}

TEST_CASE("emitted wubi words match the code grammar") {
  CHECK(matches_wubi_grammar("bd|yad"));
  CHECK(matches_wubi_grammar("w"));
  CHECK(matches_wubi_grammar("ukd0|jghm1"));
  CHECK(matches_wubi_grammar("ab10"));
  CHECK_FALSE(matches_wubi_grammar(""));
  CHECK_FALSE(matches_wubi_grammar("abcdef"));  // six letters
  CHECK_FALSE(matches_wubi_grammar("ab|"));
  CHECK_FALSE(matches_wubi_grammar("|ab"));
  CHECK_FALSE(matches_wubi_grammar("a||b"));
  CHECK_FALSE(matches_wubi_grammar("1ab"));
  CHECK_FALSE(matches_wubi_grammar("az"));

  testgen::StrictSentenceGen gen(table(), punct(), 5);
  for (int i = 0; i < 500; ++i) {
    const auto text = encode_sentence(gen.sentence(), table(), punct(), Mode::strict);
    for (const auto& token : text.tokens) {
      if (token.kind == TokenKind::wubi_word) {
        CAPTURE(token.surface);
        CHECK(matches_wubi_grammar(token.surface));
      }
    }
  }
}

TEST_CASE("escape is applied exactly when a bare token would not survive") {
  testgen::StrictSentenceGen gen(table(), punct(), 31337);
  for (int i = 0; i < 2000; ++i) {
    const auto text = encode_sentence(gen.sentence(), table(), punct(), Mode::strict);
    for (const auto& token : text.tokens) {
      if (token.kind != TokenKind::passthrough) continue;
      CAPTURE(token.surface);
      if (token.surface.rfind('^', 0) == 0) {
        // Escaped: the bare remainder must NOT decode to itself.
        const std::string bare = token.surface.substr(1);
        std::string decoded;
        try {
          decoded = dec(bare);
        } catch (const Error&) {
          decoded = "<error>";
        }
        CHECK(decoded != bare);
      } else {
        CHECK(dec(token.surface) == token.surface);
      }
    }
  }
}

TEST_CASE("rendering splits back into the same token list") {
  testgen::StrictSentenceGen gen(table(), punct(), 4242);
  for (int i = 0; i < 500; ++i) {
    const auto text = encode_sentence(gen.sentence(), table(), punct(), Mode::strict);
    std::istringstream split(text.rendering());
    std::vector<std::string> pieces;
    std::string piece;
    while (split >> piece) pieces.push_back(piece);
    REQUIRE(pieces.size() == text.tokens.size());
    for (std::size_t t = 0; t < pieces.size(); ++t) {
      CHECK(pieces[t] == text.tokens[t].surface);
    }
  }
}

TEST_CASE("punctuation map file mirrors the built-in map") {
  const PunctuationMap from_file =
      PunctuationMap::load_file(testgen::kFixturePunctPath);
  CHECK(from_file.pairs() == punct().pairs());
}

TEST_CASE("punctuation map rejects non-bijective or malformed input") {
  const auto load = [](const std::string& text) {
    std::istringstream in(text);
    return PunctuationMap::load(in);
  };
  CHECK_THROWS_AS(load("。\t.\n、\t.\n"), ParseError);   // duplicate form
  CHECK_THROWS_AS(load("。\t.\n。\t,\n"), ParseError);   // duplicate mark
  CHECK_THROWS_AS(load("。\t...\n"), ParseError);        // form too long
  CHECK_THROWS_AS(load("a\t.\n"), ParseError);           // ASCII mark
  CHECK_THROWS_AS(load("。。\t.\n"), ParseError);        // two scalars
  CHECK_THROWS_AS(load("。\t. \n"), ParseError);         // space in form
}

TEST_SUITE_END();
