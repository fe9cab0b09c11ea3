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

#ifndef AW_AVOIDED_HPP
#define AW_AVOIDED_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aw/maw.hpp"
#include "aw/suffix_index.hpp"

namespace aw {

/// Word length and threshold of a fixed-length query.
class Params {
 public:
  /// Throws std::invalid_argument unless k > 2 and rho < 0.
  Params(std::size_t k, double rho);

  std::size_t k() const noexcept { return k_; }
  double rho() const noexcept { return rho_; }

 private:
  std::size_t k_;
  double rho_;
};

/// Throws std::invalid_argument unless rho is a finite negative number.
void check_threshold(double rho);

struct WordStats {
  std::uint64_t f = 0;   // the word
  std::uint64_t fp = 0;  // longest proper prefix
  std::uint64_t fs = 0;  // longest proper suffix
  std::uint64_t fi = 0;  // longest proper infix
  double expected = 0.0;
  double std = 0.0;
};

enum class WordClass { occurring, absent };

std::string_view to_string(WordClass cls) noexcept;

struct AvoidedWord {
  std::string word;
  WordStats stats;
  WordClass cls = WordClass::occurring;
};

/// fp * fs / fi, or 0 when fi == 0. The product is formed in 64-bit
/// integers before the single division.
double expected_frequency(std::uint64_t fp, std::uint64_t fs,
                          std::uint64_t fi) noexcept;

/// (f - E) / max(sqrt(E), 1).
double std_value(std::uint64_t f, double expected) noexcept;

/// Fills expected and std from the four counts.
WordStats make_stats(std::uint64_t f, std::uint64_t fp, std::uint64_t fs,
                     std::uint64_t fi) noexcept;

/// Absent rho-avoided words of length k: the minimal absent words of that
/// length whose std passes the threshold. Throws InternalError if a tuple
/// does not agree with the index.
std::vector<AvoidedWord> absent_avoided(const SuffixIndex& index,
                                        std::span<const MawTuple> maws,
                                        const Params& params);

/// Occurring rho-avoided words of length k. Depth-first over explicit
/// nodes, descending only above word-depth k - 1; every explicit node v at
/// depth k - 1 supplies fp = C(v) and fi = C(link(v)) for all its children.
/// Words whose longest proper prefix is implicit are never reported: their
/// std is non-negative.
std::vector<AvoidedWord> occurring_avoided(const SuffixIndex& index,
                                           const Params& params);

/// Union of both classes ordered by (std, word).
std::vector<AvoidedWord> avoided_words(const SuffixIndex& index,
                                       std::span<const MawTuple> maws,
                                       const Params& params);

/// rho-avoided words of every length >= 3, ordered by (std, length, word).
std::vector<AvoidedWord> all_avoided(const SuffixIndex& index,
                                     std::span<const MawTuple> maws,
                                     double rho);

/// Full pipeline for one sequence: index, minimal absent words, then
/// enumeration. Without k, every length >= 3 is reported.
std::vector<AvoidedWord> find_avoided(const Sequence& seq,
                                      std::optional<std::size_t> k, double rho);

/// Orders by std, then length, then word. For a single length this is the
/// (std, word) order.
void sort_avoided(std::vector<AvoidedWord>& words);

}  // namespace aw

#endif  // AW_AVOIDED_HPP
