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

// Scaling sweeps on synthetic data. Every (n, sigma, k, rho) combination is
// one TSV row.

#include <cstdint>
#include <exception>
#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "aw/bench.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Time the avoided-word pipeline on synthetic sequences."};
  app.name("aw_bench");
  std::vector<std::size_t> lengths{1000000};
  std::vector<std::size_t> sigmas{4};
  std::vector<std::size_t> ks{8};
  std::vector<double> rhos{-10.0};
  std::size_t reps = 3;
  std::uint64_t seed = 1;
  app.add_option("-n,--length", lengths, "Text lengths")->delimiter(',');
  app.add_option("-s,--sigma", sigmas, "Alphabet sizes (2..26)")->delimiter(',');
  app.add_option("-k", ks, "Word lengths (> 2)")->delimiter(',');
  app.add_option("-r,--rho", rhos, "Thresholds (< 0)")->delimiter(',');
  app.add_option("--reps", reps, "Repetitions per point (median reported)");
  app.add_option("--seed", seed, "Generator seed");
  CLI11_PARSE(app, argc, argv);

  try {
    aw::bench::write_timing_header(std::cout);
    for (std::size_t sigma : sigmas) {
      for (std::size_t n : lengths) {
        for (std::size_t k : ks) {
          for (double rho : rhos) {
            aw::bench::write_timing_row(
                std::cout, aw::bench::time_run(n, sigma, k, rho, reps, seed));
            std::cout.flush();
          }
        }
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "aw_bench: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
