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
#include <string>
#include <string_view>
#include <vector>

namespace wubi {

// Minimal UTF-8 handling. The toolkit works on Unicode scalar values;
// invalid byte sequences are rejected rather than replaced so that every
// transform stays byte-exact reversible.

/// Decodes the scalar starting at `pos` and advances `pos` past it.
/// Throws ParseError on an invalid or truncated sequence.
char32_t decode_scalar(std::string_view text, std::size_t& pos);

/// Appends `scalar` to `out` as UTF-8.
void append_utf8(char32_t scalar, std::string& out);

/// Encodes a single scalar as UTF-8.
std::string to_utf8(char32_t scalar);

/// Decodes a whole string into scalars. Throws ParseError on invalid UTF-8.
std::vector<char32_t> to_scalars(std::string_view text);

/// Number of scalars in `text`.
std::size_t scalar_count(std::string_view text);

/// True if every byte is < 0x80.
bool is_ascii(std::string_view text);

/// CJK unified ideograph (the character class the Wubi table covers):
/// URO, extension A, the compatibility block, and the plane-2/3 extensions.
bool is_cjk_ideograph(char32_t scalar);

/// True if every scalar in `text` is a CJK ideograph (and text is non-empty).
bool all_cjk(std::string_view text);

}  // namespace wubi
