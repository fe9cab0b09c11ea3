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

#include "aw/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "aw/avoided.hpp"
#include "aw/errors.hpp"
#include "aw/fasta_io.hpp"

namespace aw::cli {

namespace {

struct Options {
  std::string input;
  std::string output;
  std::optional<std::size_t> k;
  double rho = 0.0;
  bool all_lengths = false;
  AlphabetMode alphabet = AlphabetMode::dna;
  AmbiguousMode ambiguous = AmbiguousMode::split;
  bool mark_palindromes = false;
  unsigned threads = 1;
  int precision = 6;
};

// Per-sequence outcome; the first failure (in input order) wins.
struct Outcome {
  std::vector<AvoidedWord> words;
  std::exception_ptr error;
};

Outcome analyze(const Sequence& seq, const Options& opt) {
  Outcome r;
  try {
    r.words = find_avoided(seq, opt.all_lengths ? std::nullopt : opt.k, opt.rho);
  } catch (...) {
    r.error = std::current_exception();
  }
  return r;
}

void emit(std::ostream& out, const Sequence& seq, Outcome& r,
          const ReportOptions& report) {
  if (r.error) std::rethrow_exception(r.error);
  write_report_block(out, seq.id(), r.words, report);
  r.words = {};
}

void process(const std::vector<Sequence>& sequences, const Options& opt,
             std::ostream& out) {
  const ReportOptions report{opt.precision, opt.mark_palindromes};
  write_report_header(out, report);
  const unsigned workers =
      std::min<std::size_t>(std::max(opt.threads, 1u), sequences.size());
  if (workers <= 1) {
    for (const Sequence& seq : sequences) {
      Outcome r = analyze(seq, opt);
      emit(out, seq, r, report);
    }
    return;
  }
  std::vector<Outcome> results(sequences.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t t = next++; t < sequences.size(); t = next++) {
        results[t] = analyze(sequences[t], opt);
      }
    });
  }
  for (std::thread& th : pool) th.join();
  for (std::size_t t = 0; t < sequences.size(); ++t) {
    emit(out, sequences[t], results[t], report);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Compute rho-avoided words of a (Multi)FASTA input."};
  app.name("avoidwords");
  Options opt;
  double rho = 0.0;
  std::size_t k = 0;

  app.add_option("-i,--input", opt.input, "Input (Multi)FASTA file")->required();
  app.add_option("-o,--output", opt.output, "Report file (default: stdout)");
  auto* k_opt = app.add_option("-k,--length", k, "Word length k > 2");
  auto* r_opt = app.add_option("-r,--rho", rho, "Threshold rho < 0")->required();
  auto* all_opt = app.add_flag("--all-lengths", opt.all_lengths,
                               "Report avoided words of every length >= 3");
  const std::map<std::string, AlphabetMode> alphabets{
      {"dna", AlphabetMode::dna},
      {"protein", AlphabetMode::protein},
      {"auto", AlphabetMode::detect}};
  std::string alphabet = "dna";
  app.add_option("--alphabet", alphabet, "Symbol set (default: dna)")
      ->check(CLI::IsMember(alphabets))
      ->option_text("dna|protein|auto");
  const std::map<std::string, AmbiguousMode> ambiguous{
      {"reject", AmbiguousMode::reject},
      {"skip", AmbiguousMode::skip_record},
      {"split", AmbiguousMode::split}};
  std::string ambiguous_mode = "split";
  app.add_option("--ambiguous", ambiguous_mode,
                 "Out-of-alphabet symbols (default: split)")
      ->check(CLI::IsMember(ambiguous))
      ->option_text("reject|skip|split");
  app.add_flag("--mark-palindromes", opt.mark_palindromes,
               "Add a self-complementarity column (dna only)");
  app.add_option("--threads", opt.threads, "Sequences processed concurrently")
      ->check(CLI::PositiveNumber);
  app.add_option("--precision", opt.precision, "Decimals for E and std")
      ->check(CLI::Range(0, 17));
  k_opt->excludes(all_opt);

  try {
    app.parse(argc, argv);
    opt.alphabet = alphabets.at(alphabet);
    opt.ambiguous = ambiguous.at(ambiguous_mode);
    if (!opt.all_lengths && k_opt->count() == 0) {
      throw CLI::ValidationError("-k", "required unless --all-lengths is given");
    }
    if (k_opt->count() > 0) {
      if (k <= 2) throw CLI::ValidationError("-k", "k must be greater than 2");
      opt.k = k;
    }
    if (!std::isfinite(rho) || !(rho < 0.0)) {
      throw CLI::ValidationError(r_opt->get_name(),
                                 "rho must be a finite negative number");
    }
    opt.rho = rho;
    if (opt.mark_palindromes && opt.alphabet != AlphabetMode::dna) {
      throw CLI::ValidationError("--mark-palindromes",
                                 "requires --alphabet dna");
    }
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "avoidwords: " << e.what() << '\n';
    err << "Run with --help for usage.\n";
    return kUsage;
  }

  try {
    std::vector<Sequence> sequences =
        read_fasta(std::filesystem::path(opt.input),
                   InputPolicy{opt.alphabet, opt.ambiguous});
    if (opt.output.empty()) {
      process(sequences, opt, out);
      out.flush();
    } else {
      std::ofstream file(opt.output, std::ios::binary);
      if (!file) throw InputError("cannot open '" + opt.output + "' for writing");
      process(sequences, opt, file);
      file.close();
      if (!file) throw InputError("cannot write '" + opt.output + "'");
    }
  } catch (const InputError& e) {
    err << "avoidwords: " << e.what() << '\n';
    return kInput;
  } catch (const std::invalid_argument& e) {
    err << "avoidwords: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    err << "avoidwords: internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kSuccess;
}

}  // namespace aw::cli
