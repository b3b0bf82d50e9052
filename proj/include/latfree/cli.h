// Copyright 2026 The latfree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Reports go to `out` as JSON; errors go to `err`
// as {"v": 1, "kind": "error", "error": ..., "message": ...}.

#ifndef LATFREE_CLI_H_
#define LATFREE_CLI_H_

#include <ostream>

namespace latfree {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotProved = 2;
inline constexpr int kExitUsage = 64;     // bad flags or unparsable input
inline constexpr int kExitData = 65;      // input parsed but rejected
inline constexpr int kExitBudget = 69;    // enumeration budget exceeded
inline constexpr int kExitInternal = 70;  // failed self-check

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace latfree

#endif  // LATFREE_CLI_H_
