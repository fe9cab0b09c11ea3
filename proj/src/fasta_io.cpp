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

#include "aw/fasta_io.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>

#include "aw/errors.hpp"
#include "aw/palindrome.hpp"

namespace aw {

namespace {

std::string declared_alphabet(AlphabetMode mode, const std::string& data) {
  switch (mode) {
    case AlphabetMode::dna: return std::string(kDnaAlphabet);
    case AlphabetMode::protein: return std::string(kProteinAlphabet);
    case AlphabetMode::detect: return normalize_alphabet(data);
  }
  return {};
}

class RecordBuilder {
 public:
  RecordBuilder(const InputPolicy& policy, std::vector<Sequence>& out)
      : policy_(policy), out_(out) {
    if (policy.alphabet != AlphabetMode::detect) {
      for (char c : declared_alphabet(policy.alphabet, {})) {
        allowed_[static_cast<unsigned char>(c)] = true;
      }
    }
  }

  bool open() const noexcept { return open_; }

  void start(std::string id, std::size_t line) {
    finish();
    id_ = std::move(id);
    header_line_ = line;
    data_.clear();
    open_ = true;
  }

  void append(std::string_view line, std::size_t line_no) {
    for (char c : line) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      char up = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (policy_.ambiguous == AmbiguousMode::reject &&
          policy_.alphabet != AlphabetMode::detect &&
          !allowed_[static_cast<unsigned char>(up)]) {
        throw InputError("line " + std::to_string(line_no) + ": symbol '" +
                         std::string(1, up) + "' at position " +
                         std::to_string(data_.size()) + " of record '" + id_ +
                         "' is not in the alphabet");
      }
      data_.push_back(up);
    }
  }

  void finish() {
    if (!open_) return;
    open_ = false;
    if (data_.empty()) {
      throw InputError("line " + std::to_string(header_line_) + ": record '" +
                       id_ + "' has no sequence data");
    }
    std::string alphabet = declared_alphabet(policy_.alphabet, data_);
    if (policy_.alphabet == AlphabetMode::detect) {
      out_.emplace_back(std::move(id_), std::move(data_), alphabet);
      return;
    }
    bool clean = true;
    for (char c : data_) {
      if (!allowed_[static_cast<unsigned char>(c)]) {
        clean = false;
        break;
      }
    }
    if (clean) {
      out_.emplace_back(std::move(id_), std::move(data_), alphabet);
      return;
    }
    if (policy_.ambiguous == AmbiguousMode::skip_record) return;

    std::size_t ordinal = 0;
    std::size_t p = 0;
    while (p < data_.size()) {
      while (p < data_.size() && !allowed_[static_cast<unsigned char>(data_[p])]) ++p;
      std::size_t q = p;
      while (q < data_.size() && allowed_[static_cast<unsigned char>(data_[q])]) ++q;
      if (q > p) {
        out_.emplace_back(id_ + "/" + std::to_string(++ordinal),
                          data_.substr(p, q - p), alphabet);
      }
      p = q;
    }
  }

 private:
  const InputPolicy& policy_;
  std::vector<Sequence>& out_;
  std::array<bool, 256> allowed_{};
  std::string id_;
  std::string data_;
  std::size_t header_line_ = 0;
  bool open_ = false;
};

}  // namespace

std::vector<Sequence> read_fasta(std::istream& in, const InputPolicy& policy) {
  std::vector<Sequence> out;
  RecordBuilder builder(policy, out);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == ';') continue;
    if (line.front() == '>') {
      std::size_t end = 1;
      while (end < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[end]))) {
        ++end;
      }
      std::string id = line.substr(1, end - 1);
      if (id.empty()) {
        throw InputError("line " + std::to_string(line_no) +
                         ": header without an identifier");
      }
      builder.start(std::move(id), line_no);
      continue;
    }
    if (!builder.open()) {
      throw InputError("line " + std::to_string(line_no) +
                       ": sequence data before the first '>' header");
    }
    builder.append(line, line_no);
  }
  if (in.bad()) throw InputError("read error after line " + std::to_string(line_no));
  builder.finish();
  return out;
}

std::vector<Sequence> read_fasta(const std::filesystem::path& path,
                                 const InputPolicy& policy) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return read_fasta(in, policy);
}

void write_fasta(std::ostream& out, std::span<const Sequence> sequences,
                 std::size_t width) {
  for (const Sequence& s : sequences) {
    out << '>' << s.id() << '\n';
    for (std::size_t p = 0; p < s.size(); p += width) {
      out << std::string_view(s.data()).substr(p, width) << '\n';
    }
  }
}

void write_report_header(std::ostream& out, const ReportOptions& options) {
  out << "# word\tlength\tclass\tf\tE\tstd";
  if (options.mark_palindromes) out << "\tpalindrome";
  out << '\n';
  if (!out) throw InputError("cannot write report");
}

void write_report_block(std::ostream& out, std::string_view id,
                        std::span<const AvoidedWord> words,
                        const ReportOptions& options) {
  const std::ios_base::fmtflags flags = out.flags();
  const std::streamsize precision = out.precision();
  out << '>' << id << '\n';
  out << std::fixed << std::setprecision(options.precision);
  for (const AvoidedWord& w : words) {
    out << w.word << '\t' << w.word.size() << '\t' << to_string(w.cls) << '\t'
        << w.stats.f << '\t' << w.stats.expected << '\t' << w.stats.std;
    if (options.mark_palindromes) {
      out << '\t' << (is_self_complementary(w.word) ? "yes" : "no");
    }
    out << '\n';
  }
  out.flags(flags);
  out.precision(precision);
  if (!out) throw InputError("cannot write report");
}

void write_report(std::ostream& out, std::span<const SequenceReport> results,
                  const ReportOptions& options) {
  write_report_header(out, options);
  for (const SequenceReport& r : results) {
    write_report_block(out, r.id, r.words, options);
  }
}

}  // namespace aw
