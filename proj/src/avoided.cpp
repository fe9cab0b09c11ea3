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

#include "aw/avoided.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "aw/errors.hpp"

namespace aw {

void check_threshold(double rho) {
  if (!std::isfinite(rho) || !(rho < 0.0)) {
    throw std::invalid_argument("threshold rho must be a negative number, got " +
                                std::to_string(rho));
  }
}

Params::Params(std::size_t k, double rho) : k_(k), rho_(rho) {
  if (k <= 2) {
    throw std::invalid_argument("word length k must be greater than 2, got " +
                                std::to_string(k));
  }
  check_threshold(rho);
}

std::string_view to_string(WordClass cls) noexcept {
  return cls == WordClass::absent ? "absent" : "occurring";
}

double expected_frequency(std::uint64_t fp, std::uint64_t fs,
                          std::uint64_t fi) noexcept {
  if (fi == 0) return 0.0;
  return static_cast<double>(fp * fs) / static_cast<double>(fi);
}

double std_value(std::uint64_t f, double expected) noexcept {
  return (static_cast<double>(f) - expected) /
         std::max(std::sqrt(expected), 1.0);
}

WordStats make_stats(std::uint64_t f, std::uint64_t fp, std::uint64_t fs,
                     std::uint64_t fi) noexcept {
  WordStats s{f, fp, fs, fi, 0.0, 0.0};
  s.expected = expected_frequency(fp, fs, fi);
  s.std = std_value(f, s.expected);
  return s;
}

namespace {

Locus explicit_locus(const SuffixIndex& index, NodeId id) {
  return Locus{id, index.node(id).edge_length()};
}

std::string text_word(const SuffixIndex& index, std::uint32_t start,
                      std::size_t length) {
  std::string word;
  word.reserve(length);
  for (std::size_t p = start; p < start + length; ++p) {
    word.push_back(index.decode(index.code_at(p)));
  }
  return word;
}

// Counts for w = x[i..j].alpha. Implicit infix loci have a single
// extension, which must be alpha, so fs = fi there.
WordStats absent_stats(const SuffixIndex& index, const MawTuple& maw) {
  if (maw.length() < 3) throw InternalError("absent word shorter than 3");
  Locus prefix = index.locate_factor(maw.i, maw.j);
  std::uint64_t fp = index.frequency(prefix);
  Locus infix = index.locate_factor(maw.i + 1, maw.j);
  std::uint64_t fi = index.frequency(infix);
  std::uint64_t fs = fi;
  if (index.is_explicit(infix)) {
    auto code = index.encode(maw.symbol);
    auto suffix = code ? index.child_by_code(infix, *code) : std::nullopt;
    if (!suffix) {
      throw InternalError("suffix of minimal absent word " +
                          maw_word(index, maw) + " does not occur");
    }
    fs = index.frequency(*suffix);
  } else if (index.code_at(index.node(infix.node).edge_begin + infix.offset) !=
             index.encode(maw.symbol)) {
    throw InternalError("suffix of minimal absent word " +
                        maw_word(index, maw) + " does not occur");
  }
  if (fp == 0) {
    throw InternalError("prefix of minimal absent word " +
                        maw_word(index, maw) + " does not occur");
  }
  return make_stats(0, fp, fs, fi);
}

void collect_absent(const SuffixIndex& index, std::span<const MawTuple> maws,
                    double rho, std::size_t min_length, std::size_t max_length,
                    std::vector<AvoidedWord>& out) {
  for (const MawTuple& m : maws) {
    std::size_t len = m.length();
    if (len < min_length || len > max_length) continue;
    WordStats s = absent_stats(index, m);
    if (s.std <= rho) {
      out.push_back(AvoidedWord{maw_word(index, m), s, WordClass::absent});
    }
  }
}

// Tests L(v).alpha for every non-sentinel child edge of the explicit
// internal node v.
void collect_children(const SuffixIndex& index, NodeId v, double rho,
                      std::vector<AvoidedWord>& out) {
  const Node& node = index.node(v);
  NodeId link = node.suffix_link;
  if (link == kNoNode) {
    throw InternalError("internal node without suffix link at depth " +
                        std::to_string(node.depth));
  }
  const std::uint64_t fp = node.count;
  const std::uint64_t fi = index.node(link).count;
  const Locus infix = explicit_locus(index, link);
  for (NodeId c : index.children(v)) {
    Code alpha = index.code_at(index.node(c).edge_begin);
    if (alpha == kSentinelCode) continue;
    auto suffix = index.child_by_code(infix, alpha);
    if (!suffix) {
      throw InternalError("suffix of occurring word " +
                          index.label(v) + index.decode(alpha) +
                          " missing from the index");
    }
    WordStats s = make_stats(index.node(c).count, fp,
                             index.frequency(*suffix), fi);
    if (s.std <= rho) {
      out.push_back(AvoidedWord{
          text_word(index, index.node(c).witness, std::size_t{node.depth} + 1),
          s, WordClass::occurring});
    }
  }
}

}  // namespace

std::vector<AvoidedWord> absent_avoided(const SuffixIndex& index,
                                        std::span<const MawTuple> maws,
                                        const Params& params) {
  std::vector<AvoidedWord> out;
  collect_absent(index, maws, params.rho(), params.k(), params.k(), out);
  return out;
}

std::vector<AvoidedWord> occurring_avoided(const SuffixIndex& index,
                                           const Params& params) {
  std::vector<AvoidedWord> out;
  const std::size_t target = params.k() - 1;
  if (target >= index.size()) return out;  // no repeat that long
  std::vector<NodeId> stack{index.root()};
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (NodeId v : index.children(u)) {
      const Node& node = index.node(v);
      if (node.is_leaf()) continue;
      if (node.depth < target) {
        stack.push_back(v);
      } else if (node.depth == target) {
        collect_children(index, v, params.rho(), out);
      }
    }
  }
  return out;
}

void sort_avoided(std::vector<AvoidedWord>& words) {
  std::sort(words.begin(), words.end(),
            [](const AvoidedWord& a, const AvoidedWord& b) {
              if (a.stats.std != b.stats.std) return a.stats.std < b.stats.std;
              if (a.word.size() != b.word.size()) {
                return a.word.size() < b.word.size();
              }
              return a.word < b.word;
            });
}

namespace {

// Identical words share std and length, so after sort_avoided any repeat
// sits next to its twin.
void check_unique(const std::vector<AvoidedWord>& words) {
  auto dup = std::adjacent_find(words.begin(), words.end(),
                                [](const AvoidedWord& a, const AvoidedWord& b) {
                                  return a.word == b.word;
                                });
  if (dup != words.end()) {
    throw InternalError("word reported twice: " + dup->word);
  }
}

}  // namespace

std::vector<AvoidedWord> avoided_words(const SuffixIndex& index,
                                       std::span<const MawTuple> maws,
                                       const Params& params) {
  std::vector<AvoidedWord> out = absent_avoided(index, maws, params);
  std::vector<AvoidedWord> occurring = occurring_avoided(index, params);
  out.insert(out.end(), std::make_move_iterator(occurring.begin()),
             std::make_move_iterator(occurring.end()));
  sort_avoided(out);
  check_unique(out);
  return out;
}

std::vector<AvoidedWord> all_avoided(const SuffixIndex& index,
                                     std::span<const MawTuple> maws,
                                     double rho) {
  check_threshold(rho);
  std::vector<AvoidedWord> out;
  collect_absent(index, maws, rho, 3, index.size() + 1, out);
  const NodeId total = static_cast<NodeId>(index.node_count());
  for (NodeId v = 1; v < total; ++v) {
    const Node& node = index.node(v);
    if (node.is_leaf() || node.depth < 2) continue;
    collect_children(index, v, rho, out);
  }
  sort_avoided(out);
  check_unique(out);
  return out;
}

std::vector<AvoidedWord> find_avoided(const Sequence& seq,
                                      std::optional<std::size_t> k, double rho) {
  const SuffixIndex index(seq);
  const std::vector<MawTuple> maws = compute_maws(index);
  if (k) return avoided_words(index, maws, Params(*k, rho));
  return all_avoided(index, maws, rho);
}

}  // namespace aw
