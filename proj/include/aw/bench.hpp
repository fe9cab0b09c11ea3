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

#ifndef AW_BENCH_HPP
#define AW_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "aw/sequence.hpp"

namespace aw::bench {

/// Identifies the generator: std::mt19937_64 draws mapped to symbols by
/// rejection sampling, so a seed gives the same text on every platform.
inline constexpr std::string_view kGeneratorId = "mt19937_64-rejection-v1";

/// n i.i.d. uniform symbols over the first `sigma` capital letters.
/// Throws std::invalid_argument unless n >= 1 and 2 <= sigma <= 26.
Sequence generate(std::size_t n, std::size_t sigma, std::uint64_t seed);

struct TimingRecord {
  std::size_t n = 0;
  std::size_t sigma = 0;
  std::size_t k = 0;
  double rho = 0.0;
  /// Median wall time of index + MAWs + enumeration.
  double seconds = 0.0;
  /// Peak resident set during the runs (process statistics); falls back to
  /// index_bytes where the platform offers none.
  std::size_t peak_bytes = 0;
  std::size_t index_bytes = 0;
  /// Internal nodes at word-depth k - 1, i.e. the nodes whose children the
  /// occurring routine examines.
  std::size_t nodes_considered = 0;
  std::size_t words_reported = 0;
};

TimingRecord time_run(std::size_t n, std::size_t sigma, std::size_t k,
                      double rho, std::size_t repetitions,
                      std::uint64_t seed = 1);

/// Resets the kernel's peak-RSS mark for this process. False when
/// unsupported.
bool reset_peak_rss() noexcept;
/// Peak resident set in bytes, if the platform reports it.
std::optional<std::size_t> peak_rss_bytes() noexcept;

/// Plot-ready TSV: n sigma k rho seconds peak_bytes nodes_considered.
void write_timing_header(std::ostream& out);
void write_timing_row(std::ostream& out, const TimingRecord& r);

}  // namespace aw::bench

#endif  // AW_BENCH_HPP
