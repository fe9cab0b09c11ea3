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

#include "aw/palindrome.hpp"

#include <stdexcept>

namespace aw {

namespace {

char complement(char c) noexcept {
  switch (c) {
    case 'A': return 'T';
    case 'C': return 'G';
    case 'G': return 'C';
    case 'T': return 'A';
    default: return '\0';
  }
}

}  // namespace

std::string reverse_complement(std::string_view word) {
  std::string out(word.size(), '\0');
  for (std::size_t p = 0; p < word.size(); ++p) {
    char c = complement(word[p]);
    if (c == '\0') {
      throw std::invalid_argument("non-DNA symbol '" + std::string(1, word[p]) +
                                  "' in " + std::string(word));
    }
    out[word.size() - 1 - p] = c;
  }
  return out;
}

bool is_self_complementary(std::string_view word) noexcept {
  const std::size_t n = word.size();
  for (std::size_t p = 0; p < n; ++p) {
    char c = complement(word[p]);
    if (c == '\0' || c != word[n - 1 - p]) return false;
  }
  return true;
}

std::vector<bool> mark_palindromes(std::span<const AvoidedWord> words) {
  std::vector<bool> marks;
  marks.reserve(words.size());
  for (const AvoidedWord& w : words) marks.push_back(is_self_complementary(w.word));
  return marks;
}

}  // namespace aw
