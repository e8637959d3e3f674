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

#include "wubi/report.hpp"

#include <cstdio>

namespace wubi {

namespace {

std::string fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

}  // namespace

nlohmann::json to_json(const BleuReport& report) {
  nlohmann::json bins = nlohmann::json::array();
  for (const auto& bin : report.bins) {
    bins.push_back({{"start", bin.start},
                    {"end", bin.end},
                    {"mean_bleu", bin.mean_bleu},
                    {"count", bin.count}});
  }
  return {{"corpus_bleu", report.corpus_bleu},
          {"precisions", report.precisions},
          {"bp", report.brevity_penalty},
          {"hypothesis_length", report.hypothesis_length},
          {"reference_length", report.reference_length},
          {"sentences", report.per_sentence.size()},
          {"bins", bins}};
}

nlohmann::json to_json(const SignificanceResult& result) {
  return {{"p_value", result.p_value}, {"samples", result.samples},
          {"delta", result.delta},     {"seed", result.seed},
          {"bleu_a", result.bleu_a},   {"bleu_b", result.bleu_b}};
}

nlohmann::json to_json(const CorpusStats& stats) {
  const auto pair = [](const MeanStd& m) {
    return nlohmann::json{{"mean", m.mean}, {"std", m.std}};
  };
  return {{"words_per_sentence", pair(stats.words_per_sentence)},
          {"chars_per_word", pair(stats.chars_per_word)},
          {"chars_per_sentence", pair(stats.chars_per_sentence)},
          {"sentences", stats.sentence_count}};
}

nlohmann::json vocab_summary_json(const Vocabulary& vocab,
                                  std::uint64_t total_tokens) {
  return {{"size", vocab.entries().size()},
          {"cap", vocab.cap()},
          {"coverage", vocab.coverage()},
          {"total_tokens", total_tokens}};
}

std::string human_summary(const BleuReport& report) {
  std::string out = "BLEU = " + fixed(report.corpus_bleu, 2) + "  (";
  for (std::size_t n = 0; n < kBleuOrder; ++n) {
    if (n) out += "/";
    out += fixed(report.precisions[n] * 100.0, 1);
  }
  out += ")  BP = " + fixed(report.brevity_penalty, 4);
  out += "  hyp_len = " + std::to_string(report.hypothesis_length);
  out += "  ref_len = " + std::to_string(report.reference_length);
  out += "  sentences = " + std::to_string(report.per_sentence.size());
  return out;
}

std::string human_summary(const SignificanceResult& result) {
  std::string out = "p(B >= A) = " + fixed(result.p_value, 6);
  out += "  BLEU(A) = " + fixed(result.bleu_a, 2);
  out += "  BLEU(B) = " + fixed(result.bleu_b, 2);
  out += "  delta = " + fixed(result.delta, 2);
  out += "  samples = " + std::to_string(result.samples);
  out += "  seed = " + std::to_string(result.seed);
  return out;
}

std::string human_summary(const CorpusStats& stats) {
  const auto pair = [](const char* label, const MeanStd& m) {
    return std::string(label) + " = " + fixed(m.mean, 2) + " +/- " +
           fixed(m.std, 2);
  };
  std::string out = pair("words/sentence", stats.words_per_sentence);
  out += "  " + pair("chars/word", stats.chars_per_word);
  out += "  " + pair("chars/sentence", stats.chars_per_sentence);
  out += "  sentences = " + std::to_string(stats.sentence_count);
  return out;
}

std::string bins_tsv(const std::vector<BleuBin>& bins) {
  std::string out;
  for (const auto& bin : bins) {
    out += std::to_string(bin.start) + '\t' + std::to_string(bin.end) + '\t' +
           fixed(bin.mean_bleu, 4) + '\t' + std::to_string(bin.count) + '\n';
  }
  return out;
}

}  // namespace wubi
