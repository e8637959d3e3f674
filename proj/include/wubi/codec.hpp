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

#include <string>
#include <string_view>
#include <vector>

#include "wubi/punctuation.hpp"
#include "wubi/wubi_table.hpp"

namespace wubi {

/// strict: abort on the first token that cannot be rendered to ASCII
/// losslessly (unknown character, mixed script, irregular spacing).
/// lenient: never abort; split mixed tokens, pass unknowns through
/// unchanged and report them as diagnostics.
enum class Mode { strict, lenient };

enum class TokenKind { wubi_word, passthrough, punctuation };

/// One output token. For wubi_word the surface is per-character codes
/// joined by '|'; for punctuation it is the mapped ASCII form; for
/// passthrough it is the original token, '^'-prefixed when the bare token
/// would not survive decode unchanged.
struct EncodedToken {
  TokenKind kind;
  std::string surface;

  friend bool operator==(const EncodedToken&, const EncodedToken&) = default;
};

struct EncodedText {
  std::vector<EncodedToken> tokens;

  /// Tokens joined by single spaces.
  std::string rendering() const;
};

/// A non-fatal problem found while encoding or decoding in lenient mode.
struct Diagnostic {
  std::size_t token_index;  // 0-based position in the input sentence
  std::string subject;      // offending character or token
  std::string note;
};

/// True for `code ('|' code)*` with code = [a-y]{1,5}[0-9]*.
bool matches_wubi_grammar(std::string_view token);

/// True if emitting `token` bare as a passthrough would not decode back to
/// itself: it begins with '^', contains '|', parses as a Wubi word, or
/// equals an ASCII punctuation form.
bool needs_escape(std::string_view token, const PunctuationMap& punct);

/// Final code for one character. Throws EncodeError if absent.
std::string encode_char(char32_t character, const WubiTable& table);

/// Per-character codes joined by '|'. Throws EncodeError on any unknown
/// character (carrying the character and its scalar position in the word).
EncodedToken encode_word(std::string_view word, const WubiTable& table);

/// Encodes one pre-segmented sentence (tokens separated by single spaces).
/// Classification per token: all-CJK -> wubi_word; a single mapped
/// punctuation mark -> its ASCII form; all-ASCII -> passthrough with the
/// escape rule; anything else is an error in strict mode and is split into
/// maximal per-class runs in lenient mode. Lenient diagnostics are appended
/// to `diagnostics` when given.
EncodedText encode_sentence(std::string_view sentence, const WubiTable& table,
                            const PunctuationMap& punct, Mode mode,
                            std::vector<Diagnostic>* diagnostics = nullptr);

/// Exact inverse of encode_sentence on its output. '^'-prefixed tokens are
/// unescaped, punctuation forms mapped back, Wubi words split on '|' and
/// looked up; all other tokens pass through. Strict mode throws DecodeError
/// on unknown codes or malformed '|' placement; lenient keeps the token and
/// reports it.
std::string decode_sentence(std::string_view rendering, const WubiTable& table,
                            const PunctuationMap& punct,
                            Mode mode = Mode::strict,
                            std::vector<Diagnostic>* diagnostics = nullptr);

/// ASCII form of a mapped mark; unmapped marks pass through unchanged.
std::string normalize_punctuation(char32_t mark, const PunctuationMap& punct);

/// Inverse: maps an ASCII form back to its mark, other strings unchanged.
std::string denormalize_punctuation(const std::string& form,
                                    const PunctuationMap& punct);

}  // namespace wubi
