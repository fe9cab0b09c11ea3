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

#ifndef AW_FASTA_IO_HPP
#define AW_FASTA_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aw/avoided.hpp"
#include "aw/sequence.hpp"

namespace aw {

enum class AlphabetMode { dna, protein, detect };

/// What to do with symbols outside the declared alphabet.
enum class AmbiguousMode { reject, skip_record, split };

/// Symbols are always folded to upper case.
struct InputPolicy {
  AlphabetMode alphabet = AlphabetMode::dna;
  AmbiguousMode ambiguous = AmbiguousMode::split;
};

/// Reads every record of a (Multi)FASTA stream.
///
/// The id is the header text up to the first whitespace. Sequence lines may
/// be wrapped; blank lines and `;` comment lines are ignored. Under
/// AmbiguousMode::split a record containing out-of-alphabet symbols is cut
/// into its maximal clean runs, named `<id>/1`, `<id>/2`, ... in order;
/// records without such symbols keep their id.
///
/// Throws InputError on malformed input (with the line number) and, under
/// AmbiguousMode::reject, on the first out-of-alphabet symbol.
std::vector<Sequence> read_fasta(std::istream& in, const InputPolicy& policy);
std::vector<Sequence> read_fasta(const std::filesystem::path& path,
                                 const InputPolicy& policy);

/// Writes records wrapped at `width` symbols per line.
void write_fasta(std::ostream& out, std::span<const Sequence> sequences,
                 std::size_t width = 60);

struct ReportOptions {
  int precision = 6;
  bool mark_palindromes = false;
};

struct SequenceReport {
  std::string id;
  std::vector<AvoidedWord> words;
};

/// TSV report: one header line, then for each sequence a `>id` line
/// followed by `word length class f E std` rows (plus a `palindrome`
/// column when requested). E and std use fixed notation.
void write_report_header(std::ostream& out, const ReportOptions& options);
void write_report_block(std::ostream& out, std::string_view id,
                        std::span<const AvoidedWord> words,
                        const ReportOptions& options);
void write_report(std::ostream& out, std::span<const SequenceReport> results,
                  const ReportOptions& options = {});

}  // namespace aw

#endif  // AW_FASTA_IO_HPP
