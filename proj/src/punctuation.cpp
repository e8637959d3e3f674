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

#include "wubi/punctuation.hpp"

#include <fstream>
#include <istream>

#include "wubi/errors.hpp"
#include "wubi/unicode.hpp"

namespace wubi {

namespace {

bool is_printable_ascii(char c) { return c > 0x20 && c < 0x7F; }

}  // namespace

void PunctuationMap::insert(char32_t mark, std::string form,
                            std::size_t line_no) {
  if (mark < 0x80) {
    throw ParseError("mark '" + to_utf8(mark) + "' is not a non-ASCII scalar",
                     line_no);
  }
  if (form.empty() || form.size() > 2 ||
      !std::all_of(form.begin(), form.end(), is_printable_ascii)) {
    throw ParseError("form '" + form + "' is not 1-2 printable ASCII characters",
                     line_no);
  }
  if (forward_.count(mark)) {
    throw ParseError("mark '" + to_utf8(mark) + "' appears twice", line_no);
  }
  if (reverse_.count(form)) {
    throw ParseError("form '" + form + "' claimed by two marks", line_no);
  }
  reverse_.emplace(form, mark);
  forward_.emplace(mark, std::move(form));
}

PunctuationMap PunctuationMap::builtin() {
  PunctuationMap map;
  const std::pair<char32_t, const char*> pairs[] = {
      {U'。', "."},  {U'，', ","},  {U'、', "\\,"}, {U'？', "?"},
      {U'！', "!"},  {U'：', ":"},  {U'；', ";"},   {U'（', "("},
      {U'）', ")"},  {U'《', "<"},  {U'》', ">"},   {U'“', "\""},
      {U'”', "\\\""}, {U'‘', "'"},  {U'’', "\\'"},  {U'—', "-"},
      {U'…', "\\."},
  };
  for (const auto& [mark, form] : pairs) map.insert(mark, form, 0);
  return map;
}

PunctuationMap PunctuationMap::load(std::istream& in) {
  PunctuationMap map;
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
    const std::string mark_field = line.substr(0, tab);
    std::string form = line.substr(tab + 1);

    std::size_t pos = 0;
    char32_t mark = 0;
    try {
      mark = decode_scalar(mark_field, pos);
    } catch (const ParseError&) {
      throw ParseError("mark field is not valid UTF-8", line_no);
    }
    if (pos != mark_field.size() || mark_field.empty()) {
      throw ParseError("mark field must be exactly one scalar", line_no);
    }
    map.insert(mark, std::move(form), line_no);
  }
  return map;
}

PunctuationMap PunctuationMap::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open punctuation map: " + path);
  try {
    return load(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::optional<std::string> PunctuationMap::to_ascii(char32_t mark) const {
  const auto it = forward_.find(mark);
  if (it == forward_.end()) return std::nullopt;
  return it->second;
}

std::optional<char32_t> PunctuationMap::to_mark(
    const std::string& ascii_form) const {
  const auto it = reverse_.find(ascii_form);
  if (it == reverse_.end()) return std::nullopt;
  return it->second;
}

}  // namespace wubi
