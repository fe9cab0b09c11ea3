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

#ifndef AW_SEQUENCE_HPP
#define AW_SEQUENCE_HPP

#include <cstddef>
#include <string>
#include <string_view>

namespace aw {

inline constexpr std::string_view kDnaAlphabet = "ACGT";
inline constexpr std::string_view kProteinAlphabet = "ACDEFGHIKLMNPQRSTVWY";

/// A text over an explicit, ordered alphabet.
///
/// Symbols are single bytes. The alphabet is kept sorted and free of
/// duplicates; its order is the order used for every lexicographic
/// comparison downstream. Construction validates that every symbol of the
/// data is a member of the alphabet.
class Sequence {
 public:
  Sequence() = default;

  /// Throws std::invalid_argument if `alphabet` is empty or `data` contains
  /// a symbol outside it.
  Sequence(std::string id, std::string data, std::string_view alphabet);

  /// Alphabet = distinct symbols of `data`.
  static Sequence with_own_alphabet(std::string id, std::string data);

  const std::string& id() const noexcept { return id_; }
  const std::string& data() const noexcept { return data_; }
  const std::string& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }
  std::size_t sigma() const noexcept { return alphabet_.size(); }

  bool in_alphabet(char c) const noexcept;

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::string id_;
  std::string data_;
  std::string alphabet_;
};

/// Sorted, de-duplicated copy of `symbols`.
std::string normalize_alphabet(std::string_view symbols);

}  // namespace aw

#endif  // AW_SEQUENCE_HPP
