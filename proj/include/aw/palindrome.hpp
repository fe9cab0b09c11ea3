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

#ifndef AW_PALINDROME_HPP
#define AW_PALINDROME_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aw/avoided.hpp"

namespace aw {

/// Reverse complement over {A, C, G, T}. Throws std::invalid_argument on
/// any other symbol.
std::string reverse_complement(std::string_view word);

/// True iff the word equals its reverse complement (restriction-site
/// style palindrome). Non-DNA words are never self-complementary.
bool is_self_complementary(std::string_view word) noexcept;

std::vector<bool> mark_palindromes(std::span<const AvoidedWord> words);

}  // namespace aw

#endif  // AW_PALINDROME_HPP
