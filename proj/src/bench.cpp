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

#include "aw/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "aw/avoided.hpp"
#include "aw/maw.hpp"
#include "aw/suffix_index.hpp"

namespace aw::bench {

Sequence generate(std::size_t n, std::size_t sigma, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("generate: n must be positive");
  if (sigma < 2 || sigma > 26) {
    throw std::invalid_argument("generate: sigma must lie in [2, 26]");
  }
  std::mt19937_64 rng(seed);
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  // Draws above `limit` would bias the residues.
  const std::uint64_t limit = max - (max % sigma + 1) % sigma;
  std::string data(n, 'A');
  for (char& c : data) {
    std::uint64_t draw;
    do {
      draw = rng();
    } while (draw > limit);
    c = static_cast<char>('A' + draw % sigma);
  }
  std::string alphabet;
  for (std::size_t s = 0; s < sigma; ++s) alphabet.push_back(static_cast<char>('A' + s));
  return Sequence("random_n" + std::to_string(n) + "_s" + std::to_string(sigma),
                  std::move(data), alphabet);
}

bool reset_peak_rss() noexcept {
  std::ofstream f("/proc/self/clear_refs");
  if (!f) return false;
  f << "5";
  f.close();
  return static_cast<bool>(f);
}

std::optional<std::size_t> peak_rss_bytes() noexcept {
  try {
    std::ifstream f("/proc/self/status");
    std::string line;
    while (std::getline(f, line)) {
      if (line.rfind("VmHWM:", 0) == 0) {
        std::istringstream fields(line.substr(6));
        std::size_t kb = 0;
        if (fields >> kb) return kb * 1024;
      }
    }
  } catch (...) {
  }
  return std::nullopt;
}

TimingRecord time_run(std::size_t n, std::size_t sigma, std::size_t k,
                      double rho, std::size_t repetitions, std::uint64_t seed) {
  const Params params(k, rho);
  TimingRecord rec;
  rec.n = n;
  rec.sigma = sigma;
  rec.k = k;
  rec.rho = rho;
  const Sequence seq = generate(n, sigma, seed);
  const bool peak_supported = reset_peak_rss();

  std::vector<double> times;
  for (std::size_t rep = 0; rep < std::max<std::size_t>(repetitions, 1); ++rep) {
    auto start = std::chrono::steady_clock::now();
    const SuffixIndex index(seq);
    const std::vector<MawTuple> maws = compute_maws(index);
    const std::vector<AvoidedWord> words = avoided_words(index, maws, params);
    auto stop = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double>(stop - start).count());
    if (rep == 0) {
      rec.index_bytes = index.memory_bytes();
      rec.nodes_considered =
          index.count_internal_nodes_at_depth(static_cast<std::uint32_t>(k - 1));
      rec.words_reported = words.size();
    }
  }
  std::sort(times.begin(), times.end());
  const std::size_t m = times.size();
  rec.seconds = m % 2 == 1 ? times[m / 2] : 0.5 * (times[m / 2 - 1] + times[m / 2]);
  auto peak = peak_supported ? peak_rss_bytes() : std::nullopt;
  rec.peak_bytes = peak ? *peak : rec.index_bytes;
  return rec;
}

void write_timing_header(std::ostream& out) {
  out << "n\tsigma\tk\trho\tseconds\tpeak_bytes\tnodes_considered\n";
}

void write_timing_row(std::ostream& out, const TimingRecord& r) {
  out << r.n << '\t' << r.sigma << '\t' << r.k << '\t' << r.rho << '\t'
      << r.seconds << '\t' << r.peak_bytes << '\t' << r.nodes_considered << '\n';
}

}  // namespace aw::bench
