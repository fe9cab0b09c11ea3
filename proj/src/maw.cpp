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

#include "aw/maw.hpp"

#include <algorithm>
#include <cstring>
#include <ostream>

#include "aw/errors.hpp"

namespace aw {

namespace {

// Emits a.u.b for every child edge b of `u` other than `skip` and the
// sentinel. `prefix_start` is an occurrence of a.u.
void emit_extensions(const SuffixIndex& index, NodeId u,
                     std::uint32_t prefix_start, Code skip,
                     std::vector<MawTuple>& out) {
  const std::uint32_t prefix_end = prefix_start + index.node(u).depth;
  for (NodeId c : index.children(u)) {
    Code b = index.code_at(index.node(c).edge_begin);
    if (b == kSentinelCode || b == skip) continue;
    out.push_back(MawTuple{prefix_start, prefix_end, index.decode(b)});
  }
}

// Same, but skipping every symbol that already extends the explicit node v.
void emit_missing_extensions(const SuffixIndex& index, NodeId v, NodeId u,
                             std::vector<MawTuple>& out) {
  const std::uint32_t prefix_start = index.node(v).witness;
  const std::uint32_t prefix_end = prefix_start + index.node(u).depth;
  NodeId vc = index.node(v).first_child;
  for (NodeId c : index.children(u)) {
    Code b = index.code_at(index.node(c).edge_begin);
    if (b == kSentinelCode) continue;
    // Both lists are sorted by code.
    while (vc != kNoNode && index.code_at(index.node(vc).edge_begin) < b) {
      vc = index.node(vc).next_sibling;
    }
    if (vc != kNoNode && index.code_at(index.node(vc).edge_begin) == b) {
      continue;
    }
    out.push_back(MawTuple{prefix_start, prefix_end, index.decode(b)});
  }
}

// Loci strictly inside the edge (p, v), excluding the trailing sentinel of
// leaf edges, spell a.u with a single right extension. Dropping the first
// symbol maps them onto a downward path starting at link(p) (or at the root
// when p is the root); every explicit node u met on that path at word-depth
// in [D(p), D(v) - 2] yields candidates a.u.b.
void scan_edge(const SuffixIndex& index, NodeId p, NodeId v,
               std::vector<MawTuple>& out) {
  const Node& pv = index.node(p);
  const Node& vv = index.node(v);
  if (vv.depth < pv.depth + 2) return;
  const std::uint32_t max_depth = vv.depth - 2;
  const std::uint32_t start = vv.witness;  // occurrence of L(v)
  NodeId cur = p == index.root() ? index.root() : pv.suffix_link;
  if (cur == kNoNode) {
    throw InternalError("missing suffix link on internal node");
  }
  for (;;) {
    const std::uint32_t d = index.node(cur).depth;
    if (d >= pv.depth) {
      // a.u = text[start .. start + d], followed only by text[start + d + 1].
      emit_extensions(index, cur, start, index.code_at(start + d + 1), out);
    }
    NodeId next = index.find_child(cur, index.code_at(start + 1 + d));
    if (next == kNoNode) {
      throw InternalError("suffix-link image of an edge is not a path");
    }
    if (index.node(next).depth > max_depth) break;
    cur = next;
  }
}

}  // namespace

std::vector<MawTuple> compute_maws(const SuffixIndex& index) {
  std::vector<MawTuple> out;
  const NodeId total = static_cast<NodeId>(index.node_count());
  for (NodeId p = 0; p < total; ++p) {
    if (index.is_leaf(p)) continue;
    if (p != index.root()) {
      NodeId u = index.node(p).suffix_link;
      if (u == kNoNode) throw InternalError("missing suffix link on internal node");
      emit_missing_extensions(index, p, u, out);
    }
    for (NodeId v : index.children(p)) scan_edge(index, p, v, out);
  }

  auto codes = index.codes();
  auto less = [&](const MawTuple& a, const MawTuple& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    int c = std::memcmp(codes.data() + a.i, codes.data() + b.i,
                        std::size_t{a.j} - a.i + 1);
    if (c != 0) return c < 0;
    return static_cast<unsigned char>(a.symbol) <
           static_cast<unsigned char>(b.symbol);
  };
  std::sort(out.begin(), out.end(), less);
  for (std::size_t t = 1; t < out.size(); ++t) {
    if (!less(out[t - 1], out[t])) {
      throw InternalError("minimal absent word reported twice: " +
                          maw_word(index, out[t]));
    }
  }
  return out;
}

std::vector<MawTuple> maws_of_length(std::span<const MawTuple> maws,
                                     std::size_t k) {
  std::vector<MawTuple> out;
  std::copy_if(maws.begin(), maws.end(), std::back_inserter(out),
               [k](const MawTuple& m) { return m.length() == k; });
  return out;
}

std::string maw_word(const SuffixIndex& index, const MawTuple& maw) {
  std::string word;
  word.reserve(maw.length());
  for (std::uint32_t p = maw.i; p <= maw.j; ++p) {
    word.push_back(index.decode(index.code_at(p)));
  }
  word.push_back(maw.symbol);
  return word;
}

void write_maws(std::ostream& out, const SuffixIndex& index,
                std::span<const MawTuple> maws) {
  for (const MawTuple& m : maws) {
    out << m.i << '\t' << m.j << '\t' << m.symbol << '\t' << maw_word(index, m)
        << '\n';
  }
}

}  // namespace aw
