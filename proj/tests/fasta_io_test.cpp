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

#include "aw/fasta_io.hpp"

#include <sstream>
#include <string>

#include "aw/errors.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace aw {
namespace {

std::vector<Sequence> parse(const std::string& text, InputPolicy policy = {}) {
  std::istringstream in(text);
  return read_fasta(in, policy);
}

std::string error_of(const std::string& text, InputPolicy policy = {}) {
  try {
    parse(text, policy);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(ReadFasta, CanonicalRecord) {
  auto seqs = parse(">s1\nacgt\n", {AlphabetMode::dna, AmbiguousMode::reject});
  ASSERT_EQ(seqs.size(), 1u);
  EXPECT_EQ(seqs[0].id(), "s1");
  EXPECT_EQ(seqs[0].data(), "ACGT");
  EXPECT_EQ(seqs[0].alphabet(), "ACGT");
}

TEST(ReadFasta, HeaderAndLayout) {
  auto seqs = parse(
      "; comment\n>chr1 some description\r\nAC\n\nGT\n>chr2\nTTTT");
  ASSERT_EQ(seqs.size(), 2u);
  EXPECT_EQ(seqs[0].id(), "chr1");
  EXPECT_EQ(seqs[0].data(), "ACGT");
  EXPECT_EQ(seqs[1].id(), "chr2");
  EXPECT_EQ(seqs[1].data(), "TTTT");
}

TEST(ReadFasta, SplitAtAmbiguous) {
  auto seqs = parse(">s1\nACGTNNACG\n",
                    {AlphabetMode::dna, AmbiguousMode::split});
  ASSERT_EQ(seqs.size(), 2u);
  EXPECT_EQ(seqs[0].id(), "s1/1");
  EXPECT_EQ(seqs[0].data(), "ACGT");
  EXPECT_EQ(seqs[1].id(), "s1/2");
  EXPECT_EQ(seqs[1].data(), "ACG");
  EXPECT_TRUE(parse(">s\nNNN\n").empty());
}

TEST(ReadFasta, SkipRecord) {
  auto seqs = parse(">a\nACNT\n>b\nGGC\n",
                    {AlphabetMode::dna, AmbiguousMode::skip_record});
  ASSERT_EQ(seqs.size(), 1u);
  EXPECT_EQ(seqs[0].id(), "b");
}

TEST(ReadFasta, ProteinAndDetect) {
  auto protein = parse(">p\nmkvl\n", {AlphabetMode::protein, AmbiguousMode::reject});
  EXPECT_EQ(protein[0].sigma(), 20u);
  auto detect = parse(">d\nbaaab\n", {AlphabetMode::detect, AmbiguousMode::reject});
  EXPECT_EQ(detect[0].alphabet(), "AB");
  EXPECT_EQ(detect[0].data(), "BAAAB");
}

TEST(ReadFasta, ErrorsNameTheLine) {
  InputPolicy reject{AlphabetMode::dna, AmbiguousMode::reject};
  EXPECT_EQ(error_of(">a\nACGT\nACXT\n", reject),
            "line 3: symbol 'X' at position 6 of record 'a' is not in the alphabet");
  EXPECT_EQ(error_of("ACGT\n"),
            "line 1: sequence data before the first '>' header");
  EXPECT_EQ(error_of(">a\nAC\n> b\nAC\n"), "line 3: header without an identifier");
  EXPECT_EQ(error_of(">a\n>b\nAC\n"), "line 1: record 'a' has no sequence data");
  EXPECT_THROW(read_fasta(std::filesystem::path("/nonexistent/x.fa"), InputPolicy{}),
               InputError);
}

TEST(WriteFasta, RoundTrip) {
  std::vector<Sequence> seqs{testing::dna(std::string(130, 'G') + "ACGT", "one"),
                             testing::dna("T", "two")};
  std::ostringstream out;
  write_fasta(out, seqs, 60);
  EXPECT_EQ(parse(out.str()), seqs);
  EXPECT_EQ(out.str().substr(0, 5), ">one\n");
}

TEST(Report, GoldenRows) {
  auto words = find_avoided(testing::dna(testing::kExampleText), 3, -0.4);
  std::ostringstream out;
  write_report(out, std::vector<SequenceReport>{{"x", words}});
  const std::string text = out.str();
  EXPECT_EQ(text.rfind("# word\tlength\tclass\tf\tE\tstd\n>x\n", 0), 0u);
  EXPECT_NE(text.find("AGT\t3\tabsent\t0\t0.500000\t-0.500000\n"),
            std::string::npos);
  EXPECT_NE(text.find("CGT\t3\toccurring\t1\t1.500000\t-0.408248\n"),
            std::string::npos);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2 + 7);
}

TEST(Report, PalindromeColumnAndPrecision) {
  AvoidedWord w{"GAATTC", make_stats(0, 1, 1, 4), WordClass::absent};
  std::ostringstream out;
  out << 1.5;  // stream state must survive the report
  write_report_block(out, "s", std::vector<AvoidedWord>{w},
                     ReportOptions{2, true});
  out << 1.5;
  EXPECT_EQ(out.str(), "1.5>s\nGAATTC\t6\tabsent\t0\t0.25\t-0.25\tyes\n1.5");
}

TEST(Report, EmptyBlockAndDeterminism) {
  std::ostringstream a, b;
  auto words = find_avoided(testing::dna("ACGTACGTTT"), 4, -0.2);
  write_report(a, std::vector<SequenceReport>{{"e", {}}, {"w", words}});
  write_report(b, std::vector<SequenceReport>{{"e", {}}, {"w", words}});
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find(">e\n>w\n"), std::string::npos);
}

}  // namespace
}  // namespace aw
