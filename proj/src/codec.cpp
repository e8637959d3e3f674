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

#include "wubi/codec.hpp"

#include <algorithm>

#include "wubi/errors.hpp"
#include "wubi/unicode.hpp"

namespace wubi {

namespace {

bool is_code_letter(char c) { return c >= 'a' && c <= 'y'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

// One code: [a-y]{1,5}[0-9]*
bool matches_single_code(std::string_view code) {
  std::size_t i = 0;
  while (i < code.size() && is_code_letter(code[i])) ++i;
  if (i == 0 || i > 5) return false;
  for (; i < code.size(); ++i) {
    if (!is_digit(code[i])) return false;
  }
  return true;
}

// Scalar classes the sentence codec distinguishes.
enum class ScalarClass { ideograph, punctuation, ascii, other };

ScalarClass classify(char32_t scalar, const PunctuationMap& punct) {
  if (is_cjk_ideograph(scalar)) return ScalarClass::ideograph;
  if (scalar < 0x80) return ScalarClass::ascii;
  if (punct.contains_mark(scalar)) return ScalarClass::punctuation;
  return ScalarClass::other;
}

void add_diag(std::vector<Diagnostic>* diagnostics, std::size_t token_index,
              std::string subject, std::string note) {
  if (diagnostics) {
    diagnostics->push_back({token_index, std::move(subject), std::move(note)});
  }
}

EncodedToken make_passthrough(std::string_view token,
                              const PunctuationMap& punct) {
  std::string surface;
  if (needs_escape(token, punct)) surface.push_back('^');
  surface.append(token);
  return {TokenKind::passthrough, std::move(surface)};
}

// Lenient-mode fallback: split a token into maximal per-class runs and
// encode each run on its own. Unknown characters stay as raw passthrough.
void encode_token_lenient(std::string_view token, std::size_t token_index,
                          const WubiTable& table, const PunctuationMap& punct,
                          std::vector<EncodedToken>& out,
                          std::vector<Diagnostic>* diagnostics) {
  const std::vector<char32_t> scalars = to_scalars(token);

  // Flushes a run of known ideographs as one word token.
  std::u32string word_run;
  std::string ascii_run;
  const auto flush_word = [&] {
    if (word_run.empty()) return;
    std::string codes;
    for (const char32_t c : word_run) {
      if (!codes.empty()) codes.push_back('|');
      codes += table.forward.at(c);
    }
    out.push_back({TokenKind::wubi_word, std::move(codes)});
    word_run.clear();
  };
  const auto flush_ascii = [&] {
    if (ascii_run.empty()) return;
    out.push_back(make_passthrough(ascii_run, punct));
    ascii_run.clear();
  };
  const auto flush = [&] {
    flush_word();
    flush_ascii();
  };

  for (const char32_t scalar : scalars) {
    switch (classify(scalar, punct)) {
      case ScalarClass::ideograph:
        flush_ascii();
        if (table.forward.count(scalar)) {
          word_run.push_back(scalar);
        } else {
          flush_word();
          out.push_back({TokenKind::passthrough, to_utf8(scalar)});
          add_diag(diagnostics, token_index, to_utf8(scalar),
                   "unknown character, passed through");
        }
        break;
      case ScalarClass::punctuation:
        flush();
        out.push_back({TokenKind::punctuation, *punct.to_ascii(scalar)});
        break;
      case ScalarClass::ascii:
        flush_word();
        ascii_run.push_back(static_cast<char>(scalar));
        break;
      case ScalarClass::other:
        flush();
        out.push_back({TokenKind::passthrough, to_utf8(scalar)});
        add_diag(diagnostics, token_index, to_utf8(scalar),
                 "unmapped character, passed through");
        break;
    }
  }
  flush();
}

std::vector<std::string_view> split_tokens_strict(std::string_view sentence) {
  for (const char c : sentence) {
    if (c == '\t' || c == '\r' || c == '\v' || c == '\f') {
      throw EncodeError("sentence contains whitespace other than spaces",
                        std::string(1, c), 0);
    }
  }
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (start <= sentence.size()) {
    const auto end = std::min(sentence.find(' ', start), sentence.size());
    if (end == start) {
      if (sentence.empty()) break;  // empty sentence: zero tokens
      throw EncodeError("empty token (irregular spacing)", "", tokens.size());
    }
    tokens.push_back(sentence.substr(start, end - start));
    start = end + 1;
  }
  return tokens;
}

std::vector<std::string_view> split_tokens_lenient(std::string_view sentence) {
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
  };
  while (start < sentence.size()) {
    while (start < sentence.size() && is_space(sentence[start])) ++start;
    if (start >= sentence.size()) break;
    std::size_t end = start;
    while (end < sentence.size() && !is_space(sentence[end])) ++end;
    tokens.push_back(sentence.substr(start, end - start));
    start = end;
  }
  return tokens;
}

}  // namespace

std::string EncodedText::rendering() const {
  std::string out;
  for (const auto& token : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += token.surface;
  }
  return out;
}

bool matches_wubi_grammar(std::string_view token) {
  if (token.empty()) return false;
  std::size_t start = 0;
  while (true) {
    const auto bar = token.find('|', start);
    const auto code = token.substr(start, bar == std::string_view::npos
                                              ? std::string_view::npos
                                              : bar - start);
    if (!matches_single_code(code)) return false;
    if (bar == std::string_view::npos) return true;
    start = bar + 1;
    if (start >= token.size()) return false;  // trailing '|'
  }
}

bool needs_escape(std::string_view token, const PunctuationMap& punct) {
  if (token.empty()) return false;
  if (token.front() == '^') return true;
  if (token.find('|') != std::string_view::npos) return true;
  if (matches_wubi_grammar(token)) return true;
  if (punct.contains_form(std::string(token))) return true;
  return false;
}

std::string encode_char(char32_t character, const WubiTable& table) {
  const auto it = table.forward.find(character);
  if (it == table.forward.end()) {
    throw EncodeError("character '" + to_utf8(character) + "' not in table",
                      to_utf8(character), 0);
  }
  return it->second;
}

EncodedToken encode_word(std::string_view word, const WubiTable& table) {
  std::string codes;
  std::size_t pos = 0;
  std::size_t scalar_index = 0;
  while (pos < word.size()) {
    const char32_t scalar = decode_scalar(word, pos);
    const auto it = table.forward.find(scalar);
    if (it == table.forward.end()) {
      throw EncodeError("character '" + to_utf8(scalar) + "' not in table",
                        to_utf8(scalar), scalar_index);
    }
    if (!codes.empty()) codes.push_back('|');
    codes += it->second;
    ++scalar_index;
  }
  return {TokenKind::wubi_word, std::move(codes)};
}

EncodedText encode_sentence(std::string_view sentence, const WubiTable& table,
                            const PunctuationMap& punct, Mode mode,
                            std::vector<Diagnostic>* diagnostics) {
  const std::vector<std::string_view> tokens =
      mode == Mode::strict ? split_tokens_strict(sentence)
                           : split_tokens_lenient(sentence);

  EncodedText text;
  text.tokens.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string_view token = tokens[i];
    const std::vector<char32_t> scalars = to_scalars(token);

    const bool every_ideo = std::all_of(
        scalars.begin(), scalars.end(),
        [&](char32_t s) { return classify(s, punct) == ScalarClass::ideograph; });
    const bool every_ascii = std::all_of(
        scalars.begin(), scalars.end(), [](char32_t s) { return s < 0x80; });

    if (every_ideo) {
      if (mode == Mode::strict) {
        try {
          text.tokens.push_back(encode_word(token, table));
        } catch (const EncodeError& e) {
          throw EncodeError("cannot encode token '" + std::string(token) + "'" +
                                ": character '" + e.character() +
                                "' not in table",
                            e.character(), i);
        }
        continue;
      }
      if (std::all_of(scalars.begin(), scalars.end(), [&](char32_t s) {
            return table.forward.count(s) != 0;
          })) {
        text.tokens.push_back(encode_word(token, table));
        continue;
      }
      // Falls through to the lenient splitter for unknown characters.
    } else if (scalars.size() == 1 &&
               classify(scalars[0], punct) == ScalarClass::punctuation) {
      text.tokens.push_back({TokenKind::punctuation, *punct.to_ascii(scalars[0])});
      continue;
    } else if (every_ascii) {
      text.tokens.push_back(make_passthrough(token, punct));
      continue;
    }

    if (mode == Mode::strict) {
      // Pick the first scalar that is neither a known ideograph nor ASCII
      // for the message; for all-ideograph tokens that is the unknown one.
      char32_t offender = scalars.empty() ? U' ' : scalars[0];
      for (const char32_t s : scalars) {
        const auto cls = classify(s, punct);
        if (cls == ScalarClass::other ||
            (cls == ScalarClass::ideograph && !table.forward.count(s))) {
          offender = s;
          break;
        }
        if (cls == ScalarClass::punctuation) offender = s;
      }
      throw EncodeError("cannot encode token '" + std::string(token) +
                            "' in strict mode",
                        to_utf8(offender), i);
    }
    encode_token_lenient(token, i, table, punct, text.tokens, diagnostics);
  }
  return text;
}

std::string decode_sentence(std::string_view rendering, const WubiTable& table,
                            const PunctuationMap& punct, Mode mode,
                            std::vector<Diagnostic>* diagnostics) {
  const std::vector<std::string_view> tokens =
      mode == Mode::strict ? split_tokens_strict(rendering)
                           : split_tokens_lenient(rendering);

  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string_view token = tokens[i];
    std::string decoded;

    if (token.front() == '^') {
      if (token.size() == 1) {
        if (mode == Mode::strict) {
          throw DecodeError("escape prefix with empty remainder",
                            std::string(token), "");
        }
        add_diag(diagnostics, i, std::string(token), "dangling escape kept");
        decoded = std::string(token);
      } else {
        decoded = std::string(token.substr(1));
      }
    } else if (const auto mark = punct.to_mark(std::string(token))) {
      decoded = to_utf8(*mark);
    } else if (matches_wubi_grammar(token)) {
      std::string word;
      std::size_t start = 0;
      bool failed = false;
      while (start <= token.size()) {
        const auto bar = std::min(token.find('|', start), token.size());
        const std::string code(token.substr(start, bar - start));
        const auto it = table.reverse.find(code);
        if (it == table.reverse.end()) {
          if (mode == Mode::strict) {
            throw DecodeError("code not in table", std::string(token), code);
          }
          add_diag(diagnostics, i, std::string(token),
                   "code '" + code + "' not in table, token kept");
          decoded = std::string(token);
          failed = true;
          break;
        }
        append_utf8(it->second, word);
        if (bar == token.size()) break;
        start = bar + 1;
      }
      if (!failed) decoded = std::move(word);
    } else if (token.find('|') != std::string_view::npos) {
      if (mode == Mode::strict) {
        throw DecodeError("malformed '|' placement", std::string(token), "");
      }
      add_diag(diagnostics, i, std::string(token),
               "malformed '|' placement, token kept");
      decoded = std::string(token);
    } else {
      decoded = std::string(token);
    }

    if (!out.empty()) out.push_back(' ');
    out += decoded;
  }
  return out;
}

std::string normalize_punctuation(char32_t mark, const PunctuationMap& punct) {
  if (const auto form = punct.to_ascii(mark)) return *form;
  return to_utf8(mark);
}

std::string denormalize_punctuation(const std::string& form,
                                    const PunctuationMap& punct) {
  if (const auto mark = punct.to_mark(form)) return to_utf8(*mark);
  return form;
}

}  // namespace wubi
