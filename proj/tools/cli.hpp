// Copyright 2026 The bosh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BOSH_TOOLS_CLI_HPP_
#define BOSH_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace bosh::cli {

// Exit codes shared by every subcommand.
inline constexpr int kSuccess = 0;
inline constexpr int kFailure = 1;  // violations, missing outputs, nonzero child exit
inline constexpr int kUsage = 2;    // bad arguments, unreadable or invalid input files

// Runs one bosh command line. `args` excludes the program name. Results go
// to `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bosh::cli

#endif  // BOSH_TOOLS_CLI_HPP_
