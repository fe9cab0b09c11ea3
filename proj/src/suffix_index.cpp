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

#include "aw/suffix_index.hpp"

#include <array>
#include <stdexcept>

namespace aw {

namespace {

constexpr std::size_t kMaxText = std::size_t{1} << 31;

}  // namespace

SuffixIndex::SuffixIndex(const Sequence& seq) : alphabet_(seq.alphabet()) {
  if (seq.empty()) {
    throw std::invalid_argument("cannot index an empty sequence" +
                                (seq.id().empty() ? std::string()
                                                  : " '" + seq.id() + "'"));
  }
  if (alphabet_.size() > 255) {
    throw std::invalid_argument("alphabet larger than 255 symbols");
  }
  if (seq.size() >= kMaxText) {
    throw std::invalid_argument("sequence too long to index");
  }

  std::array<Code, 256> table{};
  for (std::size_t r = 0; r < alphabet_.size(); ++r) {
    table[static_cast<unsigned char>(alphabet_[r])] = static_cast<Code>(r + 1);
  }
  text_.reserve(seq.size() + 1);
  for (char c : seq.data()) text_.push_back(table[static_cast<unsigned char>(c)]);
  text_.push_back(kSentinelCode);

  construct();
  annotate();
}

std::optional<Code> SuffixIndex::encode(char symbol) const noexcept {
  auto pos = alphabet_.find(symbol);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<Code>(pos + 1);
}

NodeId SuffixIndex::find_child(NodeId id, Code code) const noexcept {
  for (NodeId c = nodes_[id].first_child; c != kNoNode;
       c = nodes_[c].next_sibling) {
    Code first = text_[nodes_[c].edge_begin];
    if (first == code) return c;
    if (first > code) break;
  }
  return kNoNode;
}

// Ukkonen's algorithm with the active point kept as (node, edge start,
// length). Leaves are created with their final end so no global end
// pointer is needed. Nodes are never moved: the array is reserved for the
// 2N - 1 upper bound up front.
void SuffixIndex::construct() {
  const auto total = static_cast<std::uint32_t>(text_.size());
  nodes_.clear();
  nodes_.reserve(2 * static_cast<std::size_t>(total));
  nodes_.push_back(Node{});  // root

  auto new_node = [this](std::uint32_t begin, std::uint32_t end) {
    Node n;
    n.edge_begin = begin;
    n.edge_end = end;
    nodes_.push_back(n);
    return static_cast<NodeId>(nodes_.size() - 1);
  };

  // Insert `child` into the sorted sibling list of `parent`.
  auto attach = [this](NodeId parent, NodeId child) {
    Code code = text_[nodes_[child].edge_begin];
    NodeId* slot = &nodes_[parent].first_child;
    while (*slot != kNoNode && text_[nodes_[*slot].edge_begin] < code) {
      slot = &nodes_[*slot].next_sibling;
    }
    nodes_[child].next_sibling = *slot;
    *slot = child;
  };

  // Replace `old_child` by `replacement` at the same list position.
  auto replace = [this](NodeId parent, NodeId old_child, NodeId replacement) {
    NodeId* slot = &nodes_[parent].first_child;
    while (*slot != old_child) slot = &nodes_[*slot].next_sibling;
    nodes_[replacement].next_sibling = nodes_[old_child].next_sibling;
    nodes_[old_child].next_sibling = kNoNode;
    *slot = replacement;
  };

  NodeId active_node = root();
  std::uint32_t active_edge = 0;
  std::uint32_t active_length = 0;
  std::uint32_t remainder = 0;

  for (std::uint32_t pos = 0; pos < total; ++pos) {
    NodeId pending = kNoNode;  // internal node awaiting its suffix link
    ++remainder;
    while (remainder > 0) {
      if (active_length == 0) active_edge = pos;
      NodeId next = find_child(active_node, text_[active_edge]);
      if (next == kNoNode) {
        attach(active_node, new_node(pos, total));
        if (pending != kNoNode) {
          nodes_[pending].suffix_link = active_node;
          pending = kNoNode;
        }
      } else {
        std::uint32_t len = nodes_[next].edge_length();
        if (active_length >= len) {
          active_edge += len;
          active_length -= len;
          active_node = next;
          continue;
        }
        if (text_[nodes_[next].edge_begin + active_length] == text_[pos]) {
          if (pending != kNoNode) {
            nodes_[pending].suffix_link = active_node;
            pending = kNoNode;
          }
          ++active_length;
          break;
        }
        std::uint32_t begin = nodes_[next].edge_begin;
        NodeId split = new_node(begin, begin + active_length);
        replace(active_node, next, split);
        nodes_[next].edge_begin += active_length;
        attach(split, next);
        attach(split, new_node(pos, total));
        if (pending != kNoNode) nodes_[pending].suffix_link = split;
        pending = split;
      }
      --remainder;
      if (active_node == root() && active_length > 0) {
        --active_length;
        active_edge = pos - remainder + 1;
      } else if (active_node != root()) {
        NodeId link = nodes_[active_node].suffix_link;
        active_node = link == kNoNode ? root() : link;
      }
    }
  }
}

// Depth-first pass: word-depths on the way down, counts and witnesses on
// the way up. Explicit stack; degenerate texts give trees of depth n.
void SuffixIndex::annotate() {
  const auto n = static_cast<std::uint32_t>(size());
  const auto total = n + 1;
  struct Frame {
    NodeId id;
    bool expanded;
  };
  std::vector<Frame> stack;
  stack.push_back({root(), false});
  while (!stack.empty()) {
    Frame& top = stack.back();
    NodeId id = top.id;
    Node& v = nodes_[id];
    if (!top.expanded) {
      top.expanded = true;
      if (v.is_leaf()) {
        v.witness = total - v.depth;
        v.count = v.witness == n ? 0 : 1;
        stack.pop_back();
        continue;
      }
      for (NodeId c = v.first_child; c != kNoNode; c = nodes_[c].next_sibling) {
        nodes_[c].depth = v.depth + nodes_[c].edge_length();
        stack.push_back({c, false});
      }
      continue;
    }
    std::uint32_t count = 0;
    for (NodeId c = v.first_child; c != kNoNode; c = nodes_[c].next_sibling) {
      count += nodes_[c].count;
    }
    v.count = count;
    v.witness = nodes_[v.first_child].witness;
    stack.pop_back();
  }
  nodes_[root()].suffix_link = kNoNode;
}

std::optional<std::uint32_t> SuffixIndex::leaf_label(NodeId id) const {
  if (!nodes_[id].is_leaf()) return std::nullopt;
  return nodes_[id].witness;
}

Locus SuffixIndex::locate_factor(std::size_t i, std::size_t j) const {
  if (i > j || j >= size()) {
    throw std::out_of_range("factor [" + std::to_string(i) + ", " +
                            std::to_string(j) + "] outside text of length " +
                            std::to_string(size()));
  }
  NodeId cur = root();
  auto pos = static_cast<std::uint32_t>(i);
  auto remaining = static_cast<std::uint32_t>(j - i + 1);
  for (;;) {
    NodeId next = find_child(cur, text_[pos]);
    std::uint32_t len = nodes_[next].edge_length();
    if (remaining <= len) return Locus{next, remaining};
    pos += len;
    remaining -= len;
    cur = next;
  }
}

std::optional<Locus> SuffixIndex::child(const Locus& locus, char symbol) const {
  auto code = encode(symbol);
  if (!code) return std::nullopt;
  return child_by_code(locus, *code);
}

std::optional<Locus> SuffixIndex::child_by_code(const Locus& locus,
                                                Code code) const {
  const Node& v = nodes_[locus.node];
  if (locus.node != root() && locus.offset < v.edge_length()) {
    if (text_[v.edge_begin + locus.offset] != code) return std::nullopt;
    return Locus{locus.node, locus.offset + 1};
  }
  NodeId next = find_child(locus.node, code);
  if (next == kNoNode) return std::nullopt;
  return Locus{next, 1};
}

NodeId SuffixIndex::suffix_link_of(NodeId id) const {
  if (id == root()) throw std::logic_error("the root has no suffix link");
  if (nodes_[id].is_leaf()) throw std::logic_error("leaves carry no suffix link");
  return nodes_[id].suffix_link;
}

std::string SuffixIndex::spell(const Locus& locus) const {
  std::string out;
  std::uint32_t start = nodes_[locus.node].witness;
  std::uint32_t len = depth(locus);
  out.reserve(len);
  for (std::uint32_t p = start; p < start + len; ++p) {
    out.push_back(text_[p] == kSentinelCode ? '$' : decode(text_[p]));
  }
  return out;
}

std::string SuffixIndex::label(NodeId id) const {
  return spell(Locus{id, nodes_[id].edge_length()});
}

std::size_t SuffixIndex::count_internal_nodes_at_depth(
    std::uint32_t depth) const {
  std::size_t count = 0;
  for (const Node& v : nodes_) {
    if (!v.is_leaf() && v.depth == depth) ++count;
  }
  return count;
}

std::size_t SuffixIndex::memory_bytes() const noexcept {
  return nodes_.capacity() * sizeof(Node) + text_.capacity() * sizeof(Code);
}

}  // namespace aw
