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

#ifndef AW_MAW_HPP
#define AW_MAW_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "aw/suffix_index.hpp"

namespace aw {

/// Minimal absent word x[i..j] followed by `symbol`. The representation is
/// unique per word once a canonical occurrence of x[i..j] is fixed.
struct MawTuple {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  char symbol = 0;

  std::size_t length() const noexcept { return std::size_t{j} - i + 2; }
  friend bool operator==(const MawTuple&, const MawTuple&) = default;
};

/// All minimal absent words of length >= 2 of the indexed text, sorted by
/// (length, word). Absent single symbols of the declared alphabet are not
/// reported.
///
/// Runs in O(sigma * n) on the suffix tree: a word a.u.b is minimal absent
/// iff a.u and u.b occur but a.u is never followed by b. Either a.u is an
/// explicit node v (then u = link(v)) or a.u sits inside an edge, in which
/// case u is an explicit node on the suffix-link image of that edge.
std::vector<MawTuple> compute_maws(const SuffixIndex& index);

/// Tuples of word length k, order preserved.
std::vector<MawTuple> maws_of_length(std::span<const MawTuple> maws,
                                     std::size_t k);

std::string maw_word(const SuffixIndex& index, const MawTuple& maw);

/// Debug dump: one `i<TAB>j<TAB>symbol<TAB>word` line per tuple.
void write_maws(std::ostream& out, const SuffixIndex& index,
                std::span<const MawTuple> maws);

}  // namespace aw

#endif  // AW_MAW_HPP
