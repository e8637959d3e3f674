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

#include "wubi/unicode.hpp"

#include "wubi/errors.hpp"

namespace wubi {

char32_t decode_scalar(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) throw ParseError("decode past end of string");
  const auto byte = static_cast<unsigned char>(text[pos]);
  std::size_t len = 0;
  char32_t scalar = 0;
  if (byte < 0x80) {
    pos += 1;
    return byte;
  } else if ((byte & 0xE0) == 0xC0) {
    len = 2;
    scalar = byte & 0x1F;
  } else if ((byte & 0xF0) == 0xE0) {
    len = 3;
    scalar = byte & 0x0F;
  } else if ((byte & 0xF8) == 0xF0) {
    len = 4;
    scalar = byte & 0x07;
  } else {
    throw ParseError("invalid UTF-8 lead byte");
  }
  if (pos + len > text.size()) throw ParseError("truncated UTF-8 sequence");
  for (std::size_t i = 1; i < len; ++i) {
    const auto cont = static_cast<unsigned char>(text[pos + i]);
    if ((cont & 0xC0) != 0x80) throw ParseError("invalid UTF-8 continuation byte");
    scalar = (scalar << 6) | (cont & 0x3F);
  }
  // Reject overlong forms and surrogates so encode(decode(x)) == x.
  static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
  if (scalar < kMin[len] || scalar > 0x10FFFF ||
      (scalar >= 0xD800 && scalar <= 0xDFFF)) {
    throw ParseError("invalid UTF-8 scalar value");
  }
  pos += len;
  return scalar;
}

void append_utf8(char32_t scalar, std::string& out) {
  if (scalar < 0x80) {
    out.push_back(static_cast<char>(scalar));
  } else if (scalar < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (scalar >> 6)));
    out.push_back(static_cast<char>(0x80 | (scalar & 0x3F)));
  } else if (scalar < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (scalar >> 12)));
    out.push_back(static_cast<char>(0x80 | ((scalar >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (scalar & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (scalar >> 18)));
    out.push_back(static_cast<char>(0x80 | ((scalar >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((scalar >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (scalar & 0x3F)));
  }
}

std::string to_utf8(char32_t scalar) {
  std::string out;
  append_utf8(scalar, out);
  return out;
}

std::vector<char32_t> to_scalars(std::string_view text) {
  std::vector<char32_t> scalars;
  scalars.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) scalars.push_back(decode_scalar(text, pos));
  return scalars;
}

std::size_t scalar_count(std::string_view text) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    decode_scalar(text, pos);
    ++count;
  }
  return count;
}

bool is_ascii(std::string_view text) {
  for (const char c : text) {
    if (static_cast<unsigned char>(c) >= 0x80) return false;
  }
  return true;
}

bool is_cjk_ideograph(char32_t scalar) {
  return (scalar >= 0x4E00 && scalar <= 0x9FFF) ||    // URO
         (scalar >= 0x3400 && scalar <= 0x4DBF) ||    // extension A
         (scalar >= 0xF900 && scalar <= 0xFAFF) ||    // compatibility
         (scalar >= 0x20000 && scalar <= 0x2EBEF) ||  // extensions B-F
         (scalar >= 0x30000 && scalar <= 0x3134F);    // extension G
}

bool all_cjk(std::string_view text) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (!is_cjk_ideograph(decode_scalar(text, pos))) return false;
  }
  return true;
}

}  // namespace wubi
