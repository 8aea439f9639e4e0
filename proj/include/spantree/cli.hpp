// Copyright 2026 The spantree Authors
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


#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spantree {

inline constexpr const char* kVersion = "1.0.0";

inline constexpr int kExitUsage = 64;
inline constexpr int kExitDomain = 65;

/// Runs one command line (without the program name). Answers go to `out`,
/// the reproducibility header and diagnostics to `err`. Returns the exit
/// status: 0 on success, 64 for usage errors, 65 for domain errors; verify
/// returns 0 confirmed, 1 counterexample, 2 vacuous.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace spantree
