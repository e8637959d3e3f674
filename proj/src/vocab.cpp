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

#include "wubi/vocab.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "wubi/errors.hpp"

namespace wubi {

Vocabulary::Vocabulary(
    std::vector<std::pair<std::string, std::uint64_t>> entries,
    std::uint64_t cap, double coverage)
    : entries_(std::move(entries)), cap_(cap), coverage_(coverage) {
  index_.reserve(entries_.size());
  for (const auto& [token, count] : entries_) {
    (void)count;
    index_.insert(token);
  }
}

void Vocabulary::save(std::ostream& out) const {
  for (const auto& [token, count] : entries_) {
    out << token << '\t' << count << '\n';
  }
}

void Vocabulary::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write vocabulary file: " + path);
  save(out);
}

Vocabulary Vocabulary::load(std::istream& in) {
  std::vector<std::pair<std::string, std::uint64_t>> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("expected <token>\\t<count>", line_no);
    }
    const std::string token = line.substr(0, tab);
    std::uint64_t count = 0;
    try {
      count = std::stoull(line.substr(tab + 1));
    } catch (const std::exception&) {
      throw ParseError("count is not a number", line_no);
    }
    if (token.empty() || count == 0) {
      throw ParseError("empty token or zero count", line_no);
    }
    entries.emplace_back(token, count);
  }
  const auto cap = static_cast<std::uint64_t>(entries.size());
  return Vocabulary(std::move(entries), cap, 1.0);
}

Vocabulary Vocabulary::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open vocabulary file: " + path);
  try {
    return load(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::uint64_t count_tokens(std::string_view line, TokenCounts& counts) {
  std::uint64_t seen = 0;
  std::size_t start = 0;
  while (start < line.size()) {
    while (start < line.size() && line[start] == ' ') ++start;
    if (start >= line.size()) break;
    std::size_t end = start;
    while (end < line.size() && line[end] != ' ') ++end;
    ++counts[std::string(line.substr(start, end - start))];
    ++seen;
    start = end;
  }
  return seen;
}

Vocabulary build_vocab(const TokenCounts& counts, std::uint64_t total_tokens,
                       std::uint64_t cap) {
  std::vector<std::pair<std::string, std::uint64_t>> ranked(counts.begin(),
                                                            counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.size() > cap) ranked.resize(cap);

  std::uint64_t kept = 0;
  for (const auto& [token, count] : ranked) {
    (void)token;
    kept += count;
  }
  const double coverage =
      total_tokens == 0 ? 1.0
                        : static_cast<double>(kept) /
                              static_cast<double>(total_tokens);
  return Vocabulary(std::move(ranked), cap, coverage);
}

Vocabulary build_vocab(std::istream& corpus, std::uint64_t cap) {
  TokenCounts counts;
  std::uint64_t total = 0;
  std::string line;
  while (std::getline(corpus, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    total += count_tokens(line, counts);
  }
  return build_vocab(counts, total, cap);
}

std::string apply_vocab(std::string_view sentence, const Vocabulary& vocab) {
  std::string out;
  std::size_t start = 0;
  while (start < sentence.size()) {
    while (start < sentence.size() && sentence[start] == ' ') ++start;
    if (start >= sentence.size()) break;
    std::size_t end = start;
    while (end < sentence.size() && sentence[end] != ' ') ++end;
    const auto token = sentence.substr(start, end - start);
    if (!out.empty()) out.push_back(' ');
    out += vocab.contains(token) ? std::string(token) : kUnknownToken;
    start = end;
  }
  return out;
}

}  // namespace wubi
