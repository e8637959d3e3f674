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

#include <random>
#include <sstream>

#include "generators.hpp"
#include "oracles.hpp"
#include "wubi/errors.hpp"
#include "wubi/vocab.hpp"

using namespace wubi;

namespace {

Vocabulary build(const std::string& corpus, std::uint64_t cap) {
  std::istringstream in(corpus);
  return build_vocab(in, cap);
}

}  // namespace

TEST_SUITE_BEGIN("vocab");

TEST_CASE("top-cap selection with coverage") {
  const Vocabulary vocab = build("a a b c\n", 2);
  REQUIRE(vocab.entries().size() == 2);
  CHECK(vocab.entries()[0] == std::pair<std::string, std::uint64_t>{"a", 2});
  CHECK(vocab.entries()[1] == std::pair<std::string, std::uint64_t>{"b", 1});
  CHECK(vocab.coverage() == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("cap at or above the distinct count keeps everything") {
  const Vocabulary vocab = build("a a b c\n", 10);
  CHECK(vocab.entries().size() == 3);
  CHECK(vocab.coverage() == 1.0);
  CHECK(build("x\n", 1).coverage() == 1.0);
}

TEST_CASE("empty corpus yields an empty vocabulary with coverage 1") {
  const Vocabulary vocab = build("", 5);
  CHECK(vocab.entries().empty());
  CHECK(vocab.coverage() == 1.0);
}

TEST_CASE("ties break by ascending token") {
  const Vocabulary vocab = build("b a d c\n", 3);
  REQUIRE(vocab.entries().size() == 3);
  CHECK(vocab.entries()[0].first == "a");
  CHECK(vocab.entries()[1].first == "b");
  CHECK(vocab.entries()[2].first == "c");
}

TEST_CASE("apply_vocab substitutes out-of-vocabulary tokens") {
  const Vocabulary vocab = build("a b\n", 10);
  CHECK(apply_vocab("a c b", vocab) == "a <unk> b");
  CHECK(apply_vocab("a b a", vocab) == "a b a");
  CHECK(apply_vocab("", vocab) == "");
  CHECK(apply_vocab("x y", Vocabulary{}) == "<unk> <unk>");
}

TEST_CASE("coverage matches the counting oracle and is monotone in cap") {
  std::mt19937_64 rng(314159);
  for (int round = 0; round < 20; ++round) {
    const auto lines = testgen::random_token_corpus(rng, 50, 30, 12);
    std::string corpus;
    for (const auto& line : lines) corpus += line + "\n";

    double previous = 0.0;
    for (const std::uint64_t cap : {1, 2, 5, 10, 20, 40}) {
      const Vocabulary vocab = build(corpus, cap);
      CHECK(vocab.coverage() ==
            doctest::Approx(oracle::naive_coverage(lines, cap)).epsilon(1e-15));
      CHECK(vocab.coverage() >= previous);
      previous = vocab.coverage();
    }
  }
}

TEST_CASE("save/load round trip preserves entries and order") {
  const Vocabulary vocab = build("b b b a a c\n", 3);
  std::stringstream file;
  vocab.save(file);
  CHECK(file.str() == "b\t3\na\t2\nc\t1\n");
  const Vocabulary loaded = Vocabulary::load(file);
  CHECK(loaded.entries() == vocab.entries());
  CHECK(loaded.contains("a"));
  CHECK_FALSE(loaded.contains("zzz"));
}

TEST_CASE("load rejects malformed vocabulary files") {
  const auto load = [](const std::string& text) {
    std::istringstream in(text);
    return Vocabulary::load(in);
  };
  CHECK_THROWS_AS(load("a 3\n"), ParseError);      // no tab
  CHECK_THROWS_AS(load("a\tx\n"), ParseError);     // count not a number
  CHECK_THROWS_AS(load("\t3\n"), ParseError);      // empty token
  CHECK_THROWS_AS(load("a\t0\n"), ParseError);     // zero count
}

TEST_CASE("count_tokens tolerates repeated spaces") {
  TokenCounts counts;
  CHECK(count_tokens("a  b   a", counts) == 3);
  CHECK(counts.at("a") == 2);
  CHECK(counts.at("b") == 1);
}

TEST_SUITE_END();
