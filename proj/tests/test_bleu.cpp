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

#include <algorithm>
#include <cmath>
#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "wubi/bleu.hpp"
#include "wubi/errors.hpp"
#include "wubi/report.hpp"

using namespace wubi;

TEST_SUITE_BEGIN("bleu");

TEST_CASE("perfect hypotheses score exactly 100") {
  const std::vector<std::string> corpus = {"a b c d e", "f g", "h"};
  const BleuReport report = corpus_bleu(corpus, corpus);
  CHECK(report.corpus_bleu == 100.0);
  CHECK(report.brevity_penalty == 1.0);
  for (const auto& sentence : report.per_sentence) {
    CHECK(sentence.bleu == 100.0);
  }
}

TEST_CASE("the brevity-penalty hand case") {
  const BleuReport report = corpus_bleu({"a b c d"}, {"a b c d e"});
  CHECK(report.corpus_bleu == doctest::Approx(77.8800783).epsilon(1e-7));
  CHECK(report.brevity_penalty == doctest::Approx(std::exp(-0.25)).epsilon(1e-12));
  for (const double p : report.precisions) CHECK(p == 1.0);
}

TEST_CASE("no 4-gram overlap drives the corpus score to zero") {
  const BleuReport report = corpus_bleu({"a b c d"}, {"b c d a"});
  CHECK(report.precisions[0] == 1.0);
  CHECK(report.precisions[3] == 0.0);
  CHECK(report.corpus_bleu == 0.0);
}

TEST_CASE("empty hypothesis lines are zero-precision sentences") {
  const BleuReport report = corpus_bleu({"", "a b"}, {"a b", "a b"});
  CHECK(report.per_sentence[0].bleu == 0.0);
  CHECK(report.per_sentence[1].bleu > 0.0);
  CHECK(report.corpus_bleu > 0.0);
  CHECK(corpus_bleu({""}, {"a"}).corpus_bleu == 0.0);
}

TEST_CASE("length mismatch is an error") {
  CHECK_THROWS_AS(corpus_bleu({"a"}, {"a", "b"}), Error);
}

TEST_CASE("matches the brute-force oracle on random corpora") {
  std::mt19937_64 rng(1234);
  for (int round = 0; round < 50; ++round) {
    std::uniform_int_distribution<std::size_t> sentences(1, 50);
    const std::size_t n = sentences(rng);
    const auto hyps = testgen::random_token_corpus(rng, n, 20, 30);
    const auto refs = testgen::random_token_corpus(rng, n, 20, 30);
    const BleuReport report = corpus_bleu(hyps, refs);
    CHECK(report.corpus_bleu ==
          doctest::Approx(oracle::naive_corpus_bleu(hyps, refs)).epsilon(1e-12));
    // Scoring a corpus against itself is always exactly 100.
    CHECK(corpus_bleu(hyps, hyps).corpus_bleu == 100.0);
  }
}

TEST_CASE("corpus score is invariant under sentence permutation") {
  std::mt19937_64 rng(77);
  const std::size_t n = 40;
  auto hyps = testgen::random_token_corpus(rng, n, 10, 20);
  auto refs = testgen::random_token_corpus(rng, n, 10, 20);
  const double base = corpus_bleu(hyps, refs).corpus_bleu;

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::string> hyps2;
  std::vector<std::string> refs2;
  for (const std::size_t i : order) {
    hyps2.push_back(hyps[i]);
    refs2.push_back(refs[i]);
  }
  CHECK(corpus_bleu(hyps2, refs2).corpus_bleu == base);  // integer sums
}

TEST_CASE("sentence smoothing keeps short sentences defined") {
  // hyp == ref of length 2: p1 = 1, smoothed higher orders are 1.
  const auto stats = sentence_ngram_stats({"a", "b"}, {"a", "b"});
  CHECK(sentence_bleu(stats) == 100.0);
  // Length 4 with one wrong token: all orders defined, every factor < 1.
  const auto partial = sentence_ngram_stats({"a", "b", "c", "x"},
                                            {"a", "b", "c", "d"});
  CHECK(sentence_bleu(partial) > 0.0);
  CHECK(sentence_bleu(partial) < 100.0);
}

TEST_CASE("bins group by source length") {
  SUBCASE("all sentences in one bin") {
    const BleuReport report = corpus_bleu({"a b c", "d e f"}, {"a b c", "d e f"});
    const auto bins = length_binned_bleu(report, 10);
    REQUIRE(bins.size() == 1);
    CHECK(bins[0].start == 0);
    CHECK(bins[0].end == 10);
    CHECK(bins[0].count == 2);
    CHECK(bins[0].mean_bleu == 100.0);
  }
  SUBCASE("lengths 3 and 17 with width 10") {
    const std::vector<std::string> hyp = {"a b c", "a b c d e f g h i j k l m n o p q"};
    const BleuReport report = corpus_bleu(hyp, hyp);
    const auto bins = length_binned_bleu(report, 10);
    REQUIRE(bins.size() == 2);
    CHECK(bins[0].start == 0);
    CHECK(bins[0].end == 10);
    CHECK(bins[0].count == 1);
    CHECK(bins[1].start == 10);
    CHECK(bins[1].end == 20);
    CHECK(bins[1].count == 1);
  }
  SUBCASE("bin means equal the per-sentence averages") {
    std::mt19937_64 rng(5150);
    const auto hyps = testgen::random_token_corpus(rng, 60, 12, 25);
    const auto refs = testgen::random_token_corpus(rng, 60, 12, 25);
    const BleuReport report = corpus_bleu(hyps, refs);
    for (const auto& bin : length_binned_bleu(report, 4)) {
      double sum = 0.0;
      std::uint64_t count = 0;
      for (const auto& s : report.per_sentence) {
        if (s.source_length >= bin.start && s.source_length < bin.end) {
          sum += s.bleu;
          ++count;
        }
      }
      CHECK(count == bin.count);
      CHECK(bin.mean_bleu == doctest::Approx(sum / count).epsilon(1e-12));
    }
  }
  SUBCASE("zero width is an error") {
    const BleuReport report = corpus_bleu({"a"}, {"a"});
    CHECK_THROWS_AS(length_binned_bleu(report, 0), Error);
  }
}

TEST_CASE("explicit source lengths override reference lengths") {
  const std::vector<std::uint64_t> lengths = {7};
  const BleuReport report = corpus_bleu({"a b"}, {"a b"}, &lengths, 4);
  CHECK(report.per_sentence[0].source_length == 7);
  CHECK(report.bins[0].start == 4);
}

TEST_CASE("normalize_for_bleu sends both sides into Wubi space") {
  const auto& table = testgen::fixture_table();
  const PunctuationMap punct = PunctuationMap::builtin();

  SUBCASE("Chinese reference meets Wubi hypothesis") {
    const auto hyp = normalize_for_bleu({"bd|yad"}, table, punct);
    const auto ref = normalize_for_bleu({"承诺"}, table, punct);
    CHECK(hyp[0] == "bd|yad");
    CHECK(ref[0] == "bd|yad");
    CHECK(corpus_bleu(hyp, ref).corpus_bleu == 100.0);
  }
  SUBCASE("pure ASCII lines pass through byte-identically") {
    const std::vector<std::string> lines = {"sk xyna0 ^q |x", "1995 ."};
    CHECK(normalize_for_bleu(lines, table, punct) == lines);
  }
  SUBCASE("unknown characters are kept and flagged") {
    std::vector<std::string> diags;
    const auto out = normalize_for_bleu({"猫 承诺"}, table, punct, &diags);
    CHECK(out[0] == "猫 bd|yad");
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].find("line 1") != std::string::npos);
  }
  SUBCASE("scoring after normalization equals scoring pre-encoded Wubi") {
    testgen::StrictSentenceGen gen(table, punct, 321);
    std::vector<std::string> cn_hyp;
    std::vector<std::string> cn_ref;
    std::vector<std::string> wb_hyp;
    std::vector<std::string> wb_ref;
    for (int i = 0; i < 120; ++i) {
      const std::string ref = gen.chinese_sentence();
      // Hypothesis: the reference with some tokens swapped for fresh ones,
      // so scores are non-trivial.
      auto tokens = split_tokens(ref);
      std::uniform_int_distribution<int> coin(0, 3);
      for (auto& token : tokens) {
        if (coin(gen.rng()) == 0) token = gen.word();
      }
      std::string hyp;
      for (const auto& token : tokens) {
        if (!hyp.empty()) hyp.push_back(' ');
        hyp += token;
      }
      cn_hyp.push_back(hyp);
      cn_ref.push_back(ref);
      wb_hyp.push_back(encode_sentence(hyp, table, punct, Mode::strict).rendering());
      wb_ref.push_back(encode_sentence(ref, table, punct, Mode::strict).rendering());
    }
    const BleuReport via_normalize = corpus_bleu(
        normalize_for_bleu(cn_hyp, table, punct),
        normalize_for_bleu(cn_ref, table, punct));
    const BleuReport pre_encoded = corpus_bleu(wb_hyp, wb_ref);
    CHECK(via_normalize.corpus_bleu ==
          doctest::Approx(pre_encoded.corpus_bleu).epsilon(1e-12));
    CHECK(via_normalize.brevity_penalty == pre_encoded.brevity_penalty);
    REQUIRE(via_normalize.per_sentence.size() == pre_encoded.per_sentence.size());
    for (std::size_t i = 0; i < via_normalize.per_sentence.size(); ++i) {
      CHECK(via_normalize.per_sentence[i].bleu == pre_encoded.per_sentence[i].bleu);
    }
  }
}

TEST_CASE("report payload carries the documented keys") {
  const BleuReport report = corpus_bleu({"a b c d"}, {"a b c d e"});
  const auto payload = to_json(report);
  CHECK(payload.contains("corpus_bleu"));
  CHECK(payload.contains("precisions"));
  CHECK(payload.contains("bp"));
  CHECK(payload.contains("bins"));
  CHECK(payload["precisions"].size() == 4);
  const auto tsv = bins_tsv(report.bins);
  CHECK(tsv.find('\t') != std::string::npos);
}

TEST_SUITE_END();
