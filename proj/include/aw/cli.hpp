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

#ifndef AW_CLI_HPP
#define AW_CLI_HPP

#include <iosfwd>

namespace aw::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kInput = 2,
  kInternal = 3,
};

/// Entry point of the `avoidwords` tool. The report goes to `-o` when given,
/// otherwise to `out`; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aw::cli

#endif  // AW_CLI_HPP
