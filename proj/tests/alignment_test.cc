// Copyright 2026 The Medtx Authors.
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


#include "medtx/alignment.h"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "medtx/error.h"
#include "oracle.h"

namespace medtx {
namespace {

using ::medtx::testing::EditGraph;
using ::medtx::testing::ReplayScript;
using ::medtx::testing::Words;
using Strings = std::vector<std::string>;

TEST(AlignTest, OneSubstitution) {
  const Alignment a = Align(Strings{"a", "b", "c"}, Strings{"a", "x", "c"});
  EXPECT_EQ(a.substitutions, 1u);
  EXPECT_EQ(a.deletions, 0u);
  EXPECT_EQ(a.insertions, 0u);
  EXPECT_EQ(a.matches, 2u);
  ASSERT_EQ(a.ops.size(), 3u);
  EXPECT_EQ(a.ops[1], (EditOp{EditKind::kSubstitute, 1, 1}));
}

TEST(AlignTest, Identity) {
  const Alignment a = Align(Strings{"a", "b"}, Strings{"a", "b"});
  ASSERT_EQ(a.ops.size(), 2u);
  for (const EditOp& op : a.ops) EXPECT_EQ(op.kind, EditKind::kMatch);
  EXPECT_EQ(a.errors(), 0u);
}

TEST(AlignTest, EmptySides) {
  const Alignment both = Align(Strings{}, Strings{});
  EXPECT_TRUE(both.ops.empty());
  const Alignment del = Align(Strings{"a", "b"}, Strings{});
  EXPECT_EQ(del.deletions, 2u);
  const Alignment ins = Align(Strings{}, Strings{"a"});
  EXPECT_EQ(ins.insertions, 1u);
  EXPECT_EQ(ins.ops[0], (EditOp{EditKind::kInsert, EditOp::kNone, 0}));
}

TEST(AlignTest, TieBreakPrefersSubstituteThenDelete) {
  // [a,b] vs [c]: substitute+delete and delete+substitute both cost 2; the
  // backtrace from the end picks the diagonal first.
  const Alignment a = Align(Strings{"a", "b"}, Strings{"c"});
  ASSERT_EQ(a.ops.size(), 2u);
  EXPECT_EQ(a.ops[0].kind, EditKind::kDelete);
  EXPECT_EQ(a.ops[1].kind, EditKind::kSubstitute);
  // [a] vs [b,c]: substitute at the end, insert before it.
  const Alignment b = Align(Strings{"a"}, Strings{"b", "c"});
  ASSERT_EQ(b.ops.size(), 2u);
  EXPECT_EQ(b.ops[0].kind, EditKind::kInsert);
  EXPECT_EQ(b.ops[1].kind, EditKind::kSubstitute);
}

TEST(AlignTest, TokenOverloadMatchesStrings) {
  const auto ref = Tokenize("The patient, Xarelto resumed.");
  const auto hyp = Tokenize("the patient xeralta resumed");
  const Alignment a = Align(ref, hyp);
  EXPECT_EQ(a.substitutions, 1u);
  EXPECT_EQ(a.reference_length, 4u);
}

TEST(WerTest, FormulaExample) {
  Alignment a;
  a.substitutions = 1;
  a.deletions = 1;
  a.insertions = 1;
  a.reference_length = 10;
  EXPECT_DOUBLE_EQ(WordErrorRate(a), 0.3);
}

TEST(WerTest, IdentityIsZero) {
  const Strings x = {"pulse", "60", "bpm"};
  EXPECT_EQ(WordErrorRate(Align(x, x)), 0.0);
}

TEST(WerTest, CanExceedOne) {
  EXPECT_DOUBLE_EQ(WordErrorRate(Align(Strings{"a"}, Strings{"b", "c", "d"})),
                   3.0);
}

TEST(WerTest, EmptyReferenceRejected) {
  try {
    WordErrorRate(Align(Strings{}, Strings{"a"}));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyReference);
  }
}

// Checks the structural invariants of an alignment and returns its cost.
void ExpectWellFormed(const Alignment& a, const Strings& ref,
                      const Strings& hyp) {
  ASSERT_EQ(ReplayScript(a, ref, hyp), static_cast<int>(a.errors()));
  EXPECT_EQ(a.substitutions + a.deletions + a.matches, ref.size());
  EXPECT_EQ(a.substitutions + a.insertions + a.matches, hyp.size());
  EXPECT_EQ(a.reference_length, ref.size());
}

TEST(AlignOracleTest, ExhaustiveUpToSixTokens) {
  const EditGraph graph(3, 6);
  const auto all = graph.AllStrings();
  ASSERT_EQ(all.size(), 1093u);
  std::size_t checked = 0;
  for (const auto& ref : all) {
    const std::vector<int> dist = graph.DistancesFrom(ref);
    const Strings ref_words = Words(ref);
    for (const auto& hyp : all) {
      const Strings hyp_words = Words(hyp);
      const Alignment a = Align(ref_words, hyp_words);
      ASSERT_EQ(static_cast<int>(a.errors()), dist[EditGraph::Encode(hyp)])
          << "ref size " << ref.size() << " hyp size " << hyp.size();
      ++checked;
    }
  }
  EXPECT_EQ(checked, 1093u * 1093u);
}

TEST(AlignOracleTest, ScriptsAreValidOnSmallPairs) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> len(0, 6), sym(1, 3);
  for (int iter = 0; iter < 2000; ++iter) {
    std::vector<int> r(len(rng)), h(len(rng));
    for (int& v : r) v = sym(rng);
    for (int& v : h) v = sym(rng);
    ExpectWellFormed(Align(Words(r), Words(h)), Words(r), Words(h));
  }
}

TEST(AlignOracleTest, RandomLongerPairs) {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> len(7, 8), sym(1, 3);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<int> r(len(rng)), h(len(rng));
    for (int& v : r) v = sym(rng);
    for (int& v : h) v = sym(rng);
    const EditGraph graph(3, static_cast<int>(std::max(r.size(), h.size())));
    const int expected = graph.DistancesFrom(r)[EditGraph::Encode(h)];
    const Alignment a = Align(Words(r), Words(h));
    ASSERT_EQ(static_cast<int>(a.errors()), expected);
    ExpectWellFormed(a, Words(r), Words(h));
  }
}

Strings RandomWords(std::mt19937& rng, int min_len, int max_len, int vocab) {
  std::uniform_int_distribution<int> len(min_len, max_len), sym(0, vocab - 1);
  Strings out(static_cast<std::size_t>(len(rng)));
  for (auto& w : out) w = "w" + std::to_string(sym(rng));
  return out;
}

TEST(AlignPropertyTest, CostSymmetryWithSwappedDeleteInsert) {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 500; ++iter) {
    const Strings a = RandomWords(rng, 0, 30, 5);
    const Strings b = RandomWords(rng, 0, 30, 5);
    const Alignment ab = Align(a, b);
    const Alignment ba = Align(b, a);
    ASSERT_EQ(ab.errors(), ba.errors());
    ASSERT_EQ(EditDistance(a, b), ab.errors());
  }
}

TEST(AlignPropertyTest, WerZeroIffEqual) {
  std::mt19937 rng(12);
  for (int iter = 0; iter < 500; ++iter) {
    const Strings a = RandomWords(rng, 1, 12, 2);
    const Strings b = RandomWords(rng, 1, 12, 2);
    ASSERT_EQ(WordErrorRate(Align(a, b)) == 0.0, a == b);
  }
}

TEST(AlignPropertyTest, AppendJunkGivesKOverN) {
  std::mt19937 rng(13);
  for (int iter = 0; iter < 300; ++iter) {
    const Strings ref = RandomWords(rng, 1, 40, 6);
    Strings hyp = ref;
    const std::size_t k = rng() % 10;
    for (std::size_t j = 0; j < k; ++j) hyp.push_back("junk" + std::to_string(j));
    const Alignment a = Align(ref, hyp);
    ASSERT_EQ(a.errors(), k);
    ASSERT_EQ(a.insertions, k);
    ASSERT_DOUBLE_EQ(WordErrorRate(a),
                     static_cast<double>(k) / static_cast<double>(ref.size()));
  }
}

TEST(AlignPropertyTest, DeleteKGivesKOverN) {
  std::mt19937 rng(14);
  for (int iter = 0; iter < 300; ++iter) {
    const Strings ref = RandomWords(rng, 1, 40, 6);
    Strings hyp = ref;
    const std::size_t k = rng() % (ref.size() + 1);
    for (std::size_t j = 0; j < k; ++j) {
      hyp.erase(hyp.begin() + static_cast<std::ptrdiff_t>(rng() % hyp.size()));
    }
    const Alignment a = Align(ref, hyp);
    ASSERT_EQ(a.errors(), k);
    ASSERT_EQ(a.deletions, k);
    ASSERT_DOUBLE_EQ(WordErrorRate(a),
                     static_cast<double>(k) / static_cast<double>(ref.size()));
  }
}

TEST(AlignPropertyTest, ThousandTokenDocuments) {
  std::mt19937 rng(15);
  const Strings a = RandomWords(rng, 1000, 1000, 50);
  const Strings b = RandomWords(rng, 1000, 1000, 50);
  ExpectWellFormed(Align(a, b), a, b);
}

}  // namespace
}  // namespace medtx
