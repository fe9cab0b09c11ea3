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

// Brute-force reference implementations. Nothing here calls into the
// library except the Sequence type; counts come from direct scans.

#ifndef AW_TESTS_ORACLE_HPP
#define AW_TESTS_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "aw/sequence.hpp"

namespace aw::oracle {

inline constexpr std::size_t kEnumerationGuard = 10'000'000;
inline constexpr std::size_t kMawGuard = 200;

struct Word {
  std::string word;
  std::uint64_t f = 0;
  std::uint64_t fp = 0;
  std::uint64_t fs = 0;
  std::uint64_t fi = 0;
  double expected = 0.0;
  double std = 0.0;

  bool absent() const noexcept { return f == 0; }
};

/// Overlapping occurrences of w in the text.
std::uint64_t count_occurrences(std::string_view text, std::string_view w);
std::uint64_t count_occurrences(const Sequence& x, std::string_view w);

/// Counts, expectation and std of one word (|w| >= 3), all by scanning.
Word evaluate(const Sequence& x, std::string_view w);

/// Every word of alphabet^k with std <= rho, ordered by (std, word).
/// Throws std::length_error when sigma^k exceeds kEnumerationGuard.
std::vector<Word> brute_avoided(const Sequence& x, std::size_t k, double rho);

/// Every word of length 3..n+1 with std <= rho, ordered by
/// (std, length, word). Only words whose longest proper prefix occurs can
/// have a positive expectation, so candidates are occurring factors
/// extended by one symbol.
std::vector<Word> brute_avoided_all(const Sequence& x, double rho);

/// Minimal absent words of length 2..n+1, ordered by (length, word).
/// Throws std::length_error when |x| exceeds kMawGuard.
std::vector<std::string> brute_maws(const Sequence& x);

}  // namespace aw::oracle

#endif  // AW_TESTS_ORACLE_HPP
