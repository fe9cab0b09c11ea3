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

#ifndef AW_ERRORS_HPP
#define AW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace aw {

/// Bad or unreadable input data (FASTA syntax, out-of-alphabet symbols,
/// unwritable output). Maps to exit status 2 in the CLI.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural invariant between the index, the MAW list and the
/// enumeration routines was violated. Maps to exit status 3.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace aw

#endif  // AW_ERRORS_HPP
