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

#include "wubi/chars.hpp"

#include <vector>

#include "wubi/unicode.hpp"

namespace wubi {

std::string to_characters(std::string_view sentence) {
  std::string out;
  out.reserve(sentence.size() * 2);
  std::size_t pos = 0;
  bool first = true;
  while (pos < sentence.size()) {
    const std::size_t start = pos;
    const char32_t scalar = decode_scalar(sentence, pos);
    if (!first) out.push_back(' ');
    first = false;
    if (scalar == U' ') {
      out += kSpaceToken;
    } else {
      out.append(sentence.substr(start, pos - start));
    }
  }
  return out;
}

std::string from_characters(std::string_view char_tokens) {
  std::string out;
  std::size_t start = 0;
  while (start <= char_tokens.size()) {
    const auto end = std::min(char_tokens.find(' ', start), char_tokens.size());
    const auto token = char_tokens.substr(start, end - start);
    if (token == kSpaceToken) {
      out.push_back(' ');
    } else {
      out.append(token);
    }
    if (end == char_tokens.size()) break;
    start = end + 1;
  }
  return out;
}

}  // namespace wubi
