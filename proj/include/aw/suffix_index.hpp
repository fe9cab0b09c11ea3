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

#ifndef AW_SUFFIX_INDEX_HPP
#define AW_SUFFIX_INDEX_HPP

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aw/sequence.hpp"

namespace aw {

using NodeId = std::uint32_t;
using Code = std::uint8_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

/// Code of the end-of-text terminator. Alphabet symbols get codes
/// 1..sigma in alphabet order, so code order is symbol order.
inline constexpr Code kSentinelCode = 0;

struct Node {
  /// Incoming edge label is text[edge_begin, edge_end).
  std::uint32_t edge_begin = 0;
  std::uint32_t edge_end = 0;
  /// Word-depth: length of the path-label, sentinel included for leaves.
  std::uint32_t depth = 0;
  /// Occurrences of the path-label in the text; the sentinel-only leaf
  /// counts 0, every other leaf 1.
  std::uint32_t count = 0;
  NodeId suffix_link = kNoNode;
  NodeId first_child = kNoNode;
  NodeId next_sibling = kNoNode;
  /// Start of one occurrence of the path-label. For leaves this is the
  /// suffix number.
  std::uint32_t witness = 0;

  std::uint32_t edge_length() const noexcept { return edge_end - edge_begin; }
  bool is_leaf() const noexcept { return first_child == kNoNode; }
};

/// A position in the tree, explicit or implicit. `node` is the nearest
/// explicit node at or below the position and `offset` counts symbols from
/// the start of its incoming edge; offset == edge length means the position
/// is `node` itself. The empty word is {root, 0}.
struct Locus {
  NodeId node = 0;
  std::uint32_t offset = 0;

  friend bool operator==(const Locus&, const Locus&) = default;
};

/// Suffix tree of one sequence, annotated with word-depths, occurrence
/// counts and suffix links.
///
/// Built with Ukkonen's online algorithm over the text followed by a unique
/// sentinel, so every suffix ends at a leaf and no internal node is
/// terminal. Children of a node form a singly linked list sorted by edge
/// code. A built index is immutable; all queries are const and safe to run
/// from several threads.
class SuffixIndex {
 public:
  class ChildRange;

  /// Throws std::invalid_argument on an empty sequence, an alphabet larger
  /// than 255 symbols, or a text of 2^31 symbols or more.
  explicit SuffixIndex(const Sequence& seq);

  NodeId root() const noexcept { return 0; }
  const Node& node(NodeId id) const { return nodes_[id]; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  ChildRange children(NodeId id) const;

  /// Length of the indexed sequence, sentinel excluded.
  std::size_t size() const noexcept { return text_.size() - 1; }
  const std::string& alphabet() const noexcept { return alphabet_; }
  std::size_t sigma() const noexcept { return alphabet_.size(); }

  /// Encoded text with the sentinel at position size().
  std::span<const Code> codes() const noexcept { return text_; }
  Code code_at(std::size_t pos) const { return text_[pos]; }
  /// Code of an alphabet symbol; std::nullopt outside the alphabet.
  std::optional<Code> encode(char symbol) const noexcept;
  /// Symbol of a non-sentinel code.
  char decode(Code code) const { return alphabet_[code - 1]; }

  bool is_leaf(NodeId id) const { return nodes_[id].is_leaf(); }
  /// Suffix number of a leaf; std::nullopt for internal nodes.
  std::optional<std::uint32_t> leaf_label(NodeId id) const;

  /// Locus spelling text[i..j] (inclusive). Walks down from the root,
  /// skipping whole edges, so the cost is bounded by the number of explicit
  /// nodes on the path. Throws std::out_of_range unless i <= j < size().
  Locus locate_factor(std::size_t i, std::size_t j) const;

  /// Number of occurrences of the word spelled by `locus`. The empty word
  /// occurs size() times.
  std::uint32_t frequency(const Locus& locus) const noexcept {
    return nodes_[locus.node].count;
  }

  /// Locus one symbol deeper, or std::nullopt if the extension does not
  /// occur. Implicit loci can only extend along their edge.
  std::optional<Locus> child(const Locus& locus, char symbol) const;
  std::optional<Locus> child_by_code(const Locus& locus, Code code) const;

  /// Child of an explicit node whose edge starts with `code`.
  NodeId find_child(NodeId id, Code code) const noexcept;

  /// Throws std::logic_error for the root and for leaves.
  NodeId suffix_link_of(NodeId id) const;

  bool is_explicit(const Locus& locus) const noexcept {
    return locus.node == root() ||
           locus.offset == nodes_[locus.node].edge_length();
  }
  std::uint32_t depth(const Locus& locus) const noexcept {
    const Node& n = nodes_[locus.node];
    return n.depth - n.edge_length() + locus.offset;
  }

  /// Word spelled by a locus / path-label of a node (sentinel rendered as
  /// '$').
  std::string spell(const Locus& locus) const;
  std::string label(NodeId id) const;

  /// Number of internal nodes with the given word-depth.
  std::size_t count_internal_nodes_at_depth(std::uint32_t depth) const;

  /// Bytes held by the node array and the encoded text.
  std::size_t memory_bytes() const noexcept;

 private:
  void construct();
  void annotate();

  std::string alphabet_;
  std::vector<Code> text_;
  std::vector<Node> nodes_;
};

class SuffixIndex::ChildRange {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = NodeId;
    using difference_type = std::ptrdiff_t;
    using pointer = const NodeId*;
    using reference = NodeId;

    iterator() = default;
    iterator(const std::vector<Node>* nodes, NodeId cur)
        : nodes_(nodes), cur_(cur) {}

    NodeId operator*() const noexcept { return cur_; }
    iterator& operator++() noexcept {
      cur_ = (*nodes_)[cur_].next_sibling;
      return *this;
    }
    iterator operator++(int) noexcept {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) noexcept {
      return a.cur_ == b.cur_;
    }

   private:
    const std::vector<Node>* nodes_ = nullptr;
    NodeId cur_ = kNoNode;
  };

  ChildRange(const std::vector<Node>* nodes, NodeId first)
      : nodes_(nodes), first_(first) {}
  iterator begin() const { return {nodes_, first_}; }
  iterator end() const { return {nodes_, kNoNode}; }

 private:
  const std::vector<Node>* nodes_;
  NodeId first_;
};

inline SuffixIndex::ChildRange SuffixIndex::children(NodeId id) const {
  return {&nodes_, nodes_[id].first_child};
}

}  // namespace aw

#endif  // AW_SUFFIX_INDEX_HPP
