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

#include "wubi/bpe.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

#include "wubi/errors.hpp"
#include "wubi/unicode.hpp"

namespace wubi {

namespace {

// Scalar symbols of a word plus the word-end marker as its own symbol.
std::vector<std::string> initial_symbols(std::string_view word,
                                         const std::string& marker) {
  std::vector<std::string> symbols;
  std::size_t pos = 0;
  while (pos < word.size()) {
    const std::size_t start = pos;
    decode_scalar(word, pos);
    symbols.emplace_back(word.substr(start, pos - start));
  }
  symbols.push_back(marker);
  return symbols;
}

// Replaces every adjacent (left,right) occurrence with the fused symbol,
// scanning left to right (so "aaa" with (a,a) becomes [aa, a]).
void merge_in_place(std::vector<std::string>& symbols, const std::string& left,
                    const std::string& right, const std::string& fused) {
  std::vector<std::string> next;
  next.reserve(symbols.size());
  std::size_t i = 0;
  while (i < symbols.size()) {
    if (i + 1 < symbols.size() && symbols[i] == left && symbols[i + 1] == right) {
      next.push_back(fused);
      i += 2;
    } else {
      next.push_back(std::move(symbols[i]));
      i += 1;
    }
  }
  symbols = std::move(next);
}

struct IdPairHash {
  std::size_t operator()(const std::pair<int, int>& p) const {
    return std::hash<long long>{}((static_cast<long long>(p.first) << 32) ^
                                  static_cast<unsigned>(p.second));
  }
};

}  // namespace

void BpeModel::save(std::ostream& out) const {
  out << "#bpe v1 " << word_end_marker << '\n';
  for (const auto& [left, right] : merges) {
    out << left << ' ' << right << '\n';
  }
}

void BpeModel::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write merges file: " + path);
  save(out);
}

BpeModel BpeModel::load(std::istream& in) {
  BpeModel model;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty merges file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.rfind("#bpe v1 ", 0) != 0 || line.size() <= 8) {
    throw ParseError("expected header '#bpe v1 <marker>'", 1);
  }
  model.word_end_marker = line.substr(8);

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto space = line.find(' ');
    if (space == std::string::npos || space == 0 || space + 1 >= line.size() ||
        line.find(' ', space + 1) != std::string::npos) {
      throw ParseError("expected '<left> <right>'", line_no);
    }
    std::string left = line.substr(0, space);
    std::string right = line.substr(space + 1);
    model.vocab.insert(left);
    model.vocab.insert(right);
    model.vocab.insert(left + right);
    model.merges.emplace_back(std::move(left), std::move(right));
  }
  model.target_size = model.vocab.size();
  return model;
}

BpeModel BpeModel::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open merges file: " + path);
  try {
    return load(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

BpeModel bpe_learn(const TokenCounts& word_counts, std::size_t target_size) {
  BpeModel model;
  model.target_size = target_size;
  const std::string& marker = model.word_end_marker;

  // Intern symbols; words become id sequences weighted by their count.
  std::vector<std::string> symbol_of_id;
  std::unordered_map<std::string, int> id_of_symbol;
  const auto intern = [&](const std::string& symbol) {
    const auto [it, inserted] =
        id_of_symbol.emplace(symbol, static_cast<int>(symbol_of_id.size()));
    if (inserted) symbol_of_id.push_back(symbol);
    return it->second;
  };

  struct Word {
    std::vector<int> symbols;
    std::uint64_t count;
  };
  std::vector<Word> words;
  words.reserve(word_counts.size());
  for (const auto& [word, count] : word_counts) {
    if (word.empty()) continue;
    Word entry{{}, count};
    for (const auto& symbol : initial_symbols(word, marker)) {
      const int id = intern(symbol);
      entry.symbols.push_back(id);
      model.vocab.insert(symbol);
    }
    words.push_back(std::move(entry));
  }

  using IdPair = std::pair<int, int>;
  std::unordered_map<IdPair, std::uint64_t, IdPairHash> pair_counts;
  std::unordered_map<IdPair, std::unordered_set<std::size_t>, IdPairHash> holders;

  const auto add_word_pairs = [&](std::size_t word_index, std::int64_t sign) {
    const Word& word = words[word_index];
    for (std::size_t i = 0; i + 1 < word.symbols.size(); ++i) {
      const IdPair pair{word.symbols[i], word.symbols[i + 1]};
      auto& count = pair_counts[pair];
      count = static_cast<std::uint64_t>(static_cast<std::int64_t>(count) +
                                         sign * static_cast<std::int64_t>(word.count));
      if (sign > 0) holders[pair].insert(word_index);
    }
  };
  for (std::size_t w = 0; w < words.size(); ++w) add_word_pairs(w, +1);

  // Selection is by value comparison only, so map iteration order cannot
  // influence the learned sequence.
  const auto better = [&](const IdPair& a, std::uint64_t ca, const IdPair& b,
                          std::uint64_t cb) {
    if (ca != cb) return ca > cb;
    const auto& al = symbol_of_id[a.first];
    const auto& bl = symbol_of_id[b.first];
    if (al != bl) return al < bl;
    return symbol_of_id[a.second] < symbol_of_id[b.second];
  };

  while (true) {
    bool found = false;
    IdPair best{};
    std::uint64_t best_count = 0;
    for (const auto& [pair, count] : pair_counts) {
      if (count < 2) continue;
      if (!found || better(pair, count, best, best_count)) {
        best = pair;
        best_count = count;
        found = true;
      }
    }
    if (!found) break;

    const std::string left = symbol_of_id[best.first];
    const std::string right = symbol_of_id[best.second];
    const std::string fused = left + right;
    if (!model.vocab.count(fused) && model.vocab.size() + 1 > target_size) break;

    model.merges.emplace_back(left, right);
    model.vocab.insert(fused);
    const int fused_id = intern(fused);

    // Rewrite every word still holding the pair; counts are rebuilt from
    // scratch for those words, which keeps the bookkeeping obviously right.
    const auto holder_set = holders[best];  // copy: updates mutate the map
    for (const std::size_t w : holder_set) {
      auto& symbols = words[w].symbols;
      bool present = false;
      for (std::size_t i = 0; i + 1 < symbols.size(); ++i) {
        if (symbols[i] == best.first && symbols[i + 1] == best.second) {
          present = true;
          break;
        }
      }
      if (!present) continue;  // stale holder entry
      add_word_pairs(w, -1);
      std::vector<int> next;
      next.reserve(symbols.size());
      std::size_t i = 0;
      while (i < symbols.size()) {
        if (i + 1 < symbols.size() && symbols[i] == best.first &&
            symbols[i + 1] == best.second) {
          next.push_back(fused_id);
          i += 2;
        } else {
          next.push_back(symbols[i]);
          i += 1;
        }
      }
      symbols = std::move(next);
      add_word_pairs(w, +1);
    }
    pair_counts.erase(best);
    holders.erase(best);
  }
  return model;
}

BpeModel bpe_learn(std::istream& corpus, std::size_t target_size) {
  TokenCounts counts;
  std::string line;
  while (std::getline(corpus, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    count_tokens(line, counts);
  }
  return bpe_learn(counts, target_size);
}

BpeApplier::BpeApplier(const BpeModel& model) : marker_(model.word_end_marker) {
  ranks_.reserve(model.merges.size());
  for (std::size_t rank = 0; rank < model.merges.size(); ++rank) {
    ranks_.emplace(model.merges[rank], rank);
  }
}

std::vector<std::string> BpeApplier::split_word(std::string_view word) const {
  std::vector<std::string> symbols = initial_symbols(word, marker_);
  while (symbols.size() > 1) {
    std::size_t best_rank = std::numeric_limits<std::size_t>::max();
    std::size_t best_at = 0;
    for (std::size_t i = 0; i + 1 < symbols.size(); ++i) {
      const auto it = ranks_.find({symbols[i], symbols[i + 1]});
      if (it != ranks_.end() && it->second < best_rank) {
        best_rank = it->second;
        best_at = i;
      }
    }
    if (best_rank == std::numeric_limits<std::size_t>::max()) break;
    const std::string left = symbols[best_at];
    const std::string right = symbols[best_at + 1];
    merge_in_place(symbols, left, right, left + right);
  }
  return symbols;
}

std::vector<std::string> BpeApplier::render_word(std::string_view word) const {
  std::vector<std::string> symbols = split_word(word);
  std::vector<std::string> visible;
  visible.reserve(symbols.size());

  // The marker either stands alone as the last symbol or is fused into it.
  std::string& last = symbols.back();
  if (last == marker_) {
    symbols.pop_back();
  } else if (last.size() >= marker_.size() &&
             last.compare(last.size() - marker_.size(), marker_.size(),
                          marker_) == 0) {
    last.resize(last.size() - marker_.size());
  }

  for (std::size_t i = 0; i < symbols.size(); ++i) {
    std::string token = std::move(symbols[i]);
    if (i + 1 < symbols.size()) token += "@@";
    visible.push_back(std::move(token));
  }
  return visible;
}

std::string BpeApplier::apply_sentence(std::string_view line) const {
  std::string out;
  std::size_t start = 0;
  bool first = true;
  while (start <= line.size()) {
    const auto end = std::min(line.find(' ', start), line.size());
    const auto word = line.substr(start, end - start);
    if (!first) out.push_back(' ');
    first = false;
    if (!word.empty()) {
      const auto tokens = render_word(word);
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) out.push_back(' ');
        out += tokens[i];
      }
    }
    if (end == line.size()) break;
    start = end + 1;
  }
  return out;
}

std::string bpe_undo(std::string_view line) {
  std::string out;
  std::string word;
  bool in_word = false;
  std::size_t start = 0;
  bool first = true;
  while (start <= line.size()) {
    const auto end = std::min(line.find(' ', start), line.size());
    const auto token = line.substr(start, end - start);
    if (token.size() >= 2 && token.compare(token.size() - 2, 2, "@@") == 0) {
      word.append(token.substr(0, token.size() - 2));
      in_word = true;
    } else {
      word.append(token);
      if (!first) out.push_back(' ');
      first = false;
      out += word;
      word.clear();
      in_word = false;
    }
    if (end == line.size()) break;
    start = end + 1;
  }
  if (in_word) {  // dangling continuation at end of line
    if (!first) out.push_back(' ');
    out += word;
  }
  return out;
}

}  // namespace wubi
