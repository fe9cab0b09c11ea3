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

#include "aw/sequence.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace aw {

std::string normalize_alphabet(std::string_view symbols) {
  std::array<bool, 256> seen{};
  for (char c : symbols) seen[static_cast<unsigned char>(c)] = true;
  std::string out;
  for (int c = 0; c < 256; ++c) {
    if (seen[c]) out.push_back(static_cast<char>(c));
  }
  return out;
}

Sequence::Sequence(std::string id, std::string data, std::string_view alphabet)
    : id_(std::move(id)),
      data_(std::move(data)),
      alphabet_(normalize_alphabet(alphabet)) {
  if (alphabet_.empty()) {
    throw std::invalid_argument("sequence '" + id_ + "': empty alphabet");
  }
  std::array<bool, 256> allowed{};
  for (char c : alphabet_) allowed[static_cast<unsigned char>(c)] = true;
  for (std::size_t pos = 0; pos < data_.size(); ++pos) {
    if (!allowed[static_cast<unsigned char>(data_[pos])]) {
      throw std::invalid_argument("sequence '" + id_ + "': symbol '" +
                                  std::string(1, data_[pos]) +
                                  "' at position " + std::to_string(pos) +
                                  " is not in the alphabet '" + alphabet_ +
                                  "'");
    }
  }
}

Sequence Sequence::with_own_alphabet(std::string id, std::string data) {
  std::string alphabet = normalize_alphabet(data);
  if (alphabet.empty()) {
    throw std::invalid_argument("sequence '" + id +
                                "': cannot derive an alphabet from empty data");
  }
  return Sequence(std::move(id), std::move(data), alphabet);
}

bool Sequence::in_alphabet(char c) const noexcept {
  return alphabet_.find(c) != std::string::npos;
}

}  // namespace aw
