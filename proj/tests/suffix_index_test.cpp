// Copyright 2026 The avoidwords Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aw/suffix_index.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "gtest/gtest.h"
#include "oracle.hpp"
#include "test_util.hpp"

namespace aw {
namespace {

using testing::dna;
using testing::kExampleText;

Locus locate(const SuffixIndex& index, const std::string& text,
             const std::string& word) {
  auto pos = text.find(word);
  EXPECT_NE(pos, std::string::npos) << word;
  return index.locate_factor(pos, pos + word.size() - 1);
}

TEST(SuffixIndex, WorkedExampleNodes) {
  const std::string text = kExampleText;
  SuffixIndex index(dna(text));

  Locus gcg = index.locate_factor(1, 3);
  EXPECT_TRUE(index.is_explicit(gcg));
  EXPECT_EQ(index.node(gcg.node).depth, 3u);
  EXPECT_EQ(index.frequency(gcg), 2u);
  EXPECT_EQ(index.spell(gcg), "GCG");

  Locus tct = locate(index, text, "TCT");
  EXPECT_FALSE(index.is_explicit(tct));
  EXPECT_LT(tct.offset, index.node(tct.node).edge_length());
  EXPECT_EQ(index.frequency(tct), 1u);

  Locus whole = index.locate_factor(0, text.size() - 1);
  ASSERT_TRUE(index.leaf_label(whole.node).has_value());
  EXPECT_EQ(*index.leaf_label(whole.node), 0u);
  EXPECT_FALSE(index.is_explicit(whole));  // the sentinel follows

  EXPECT_EQ(index.frequency(locate(index, text, "CG")), 3u);
  EXPECT_EQ(index.frequency(locate(index, text, "GT")), 3u);
  EXPECT_EQ(index.frequency(locate(index, text, "G")), 6u);
  EXPECT_EQ(index.frequency(Locus{index.root(), 0}), text.size());
}

TEST(SuffixIndex, SingleSymbol) {
  SuffixIndex index(dna("A"));
  EXPECT_EQ(index.node(index.root()).count, 1u);
  EXPECT_EQ(index.node_count(), 3u);  // root, "A$", "$"
  Locus a = index.locate_factor(0, 0);
  EXPECT_EQ(*index.leaf_label(a.node), 0u);
}

TEST(SuffixIndex, UnaryRun) {
  SuffixIndex index(dna("AAAA"));
  for (std::size_t len = 1; len <= 4; ++len) {
    EXPECT_EQ(index.frequency(index.locate_factor(0, len - 1)), 5 - len);
  }
}

TEST(SuffixIndex, ChildNavigation) {
  const std::string text = kExampleText;
  SuffixIndex index(dna(text));
  auto t = index.child(Locus{index.root(), 0}, 'T');
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(index.spell(*t), "T");

  Locus cg = locate(index, text, "CG");
  auto cgt = index.child(cg, 'T');
  ASSERT_TRUE(cgt.has_value());
  EXPECT_EQ(index.spell(*cgt), "CGT");
  EXPECT_EQ(index.frequency(*cgt), 1u);
  auto cgc = index.child(cg, 'C');
  ASSERT_TRUE(cgc.has_value());
  EXPECT_EQ(index.frequency(*cgc), 1u);
  EXPECT_FALSE(index.child_by_code(cg, kSentinelCode).has_value());
  EXPECT_FALSE(index.child(cg, 'N').has_value());

  // An implicit locus extends only along its edge.
  Locus tct = locate(index, text, "TCT");
  EXPECT_TRUE(index.child(tct, 'G').has_value());
  EXPECT_FALSE(index.child(tct, 'A').has_value());
}

TEST(SuffixIndex, SuffixLinks) {
  const std::string text = kExampleText;
  SuffixIndex index(dna(text));
  NodeId gcg = index.locate_factor(1, 3).node;
  NodeId cg = index.suffix_link_of(gcg);
  EXPECT_EQ(index.label(cg), "CG");
  NodeId t = locate(index, text, "T").node;
  ASSERT_TRUE(index.is_explicit(Locus{t, 1}));
  EXPECT_EQ(index.suffix_link_of(t), index.root());

  EXPECT_THROW(index.suffix_link_of(index.root()), std::logic_error);
  EXPECT_THROW(index.suffix_link_of(index.locate_factor(0, 15).node),
               std::logic_error);
}

TEST(SuffixIndex, Errors) {
  EXPECT_THROW(SuffixIndex(Sequence("e", "", kDnaAlphabet)),
               std::invalid_argument);
  SuffixIndex index(dna("ACGT"));
  EXPECT_THROW(index.locate_factor(2, 1), std::out_of_range);
  EXPECT_THROW(index.locate_factor(0, 4), std::out_of_range);
}

TEST(SuffixIndex, DeepTreeOnUnaryText) {
  const std::size_t n = 200000;
  SuffixIndex index(dna(std::string(n, 'A')));
  EXPECT_EQ(index.node(index.root()).count, n);
  EXPECT_EQ(index.frequency(index.locate_factor(0, n - 2)), 2u);
}

// Randomized structural properties against direct scans.
class SuffixIndexProperty : public ::testing::TestWithParam<std::string> {};

TEST_P(SuffixIndexProperty, InvariantsHold) {
  const std::string alphabet = GetParam();
  std::mt19937_64 rng(12345 + alphabet.size());
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 200;
    const std::string text = testing::random_text(rng, n, alphabet);
    SuffixIndex index(Sequence("r", text, alphabet));

    ASSERT_LE(index.node_count() - 1, 2 * n);  // sentinel leaf excluded
    ASSERT_EQ(index.node(index.root()).count, n);

    std::uint64_t leaf_total = 0;
    for (NodeId v = 0; v < index.node_count(); ++v) {
      const Node& node = index.node(v);
      if (node.is_leaf()) {
        leaf_total += node.count;
        continue;
      }
      std::uint32_t sum = 0;
      for (NodeId c : index.children(v)) {
        sum += index.node(c).count;
        ASSERT_EQ(index.node(c).depth, node.depth + index.node(c).edge_length());
      }
      ASSERT_EQ(node.count, sum);
      if (v == index.root()) continue;
      ASSERT_GE(std::distance(index.children(v).begin(), index.children(v).end()),
                2);
      const std::string label = index.label(v);
      ASSERT_EQ(node.count, oracle::count_occurrences(text, label)) << label;
      NodeId link = index.suffix_link_of(v);
      ASSERT_NE(link, kNoNode);
      ASSERT_EQ(index.node(link).depth + 1, node.depth);
      ASSERT_EQ(index.label(link), label.substr(1));
    }
    ASSERT_EQ(leaf_total, n);

    for (int q = 0; q < 50; ++q) {
      std::size_t i = rng() % n;
      std::size_t j = i + rng() % (n - i);
      Locus locus = index.locate_factor(i, j);
      const std::string word = text.substr(i, j - i + 1);
      ASSERT_EQ(index.spell(locus), word);
      ASSERT_EQ(index.depth(locus), word.size());
      ASSERT_EQ(index.frequency(locus), oracle::count_occurrences(text, word));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Alphabets, SuffixIndexProperty,
                         ::testing::Values("AB", "ACGT", "ACDEFGHIKLMNPQRSTVWY"));

}  // namespace
}  // namespace aw
