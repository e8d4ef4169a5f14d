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

#ifndef BOSH_PROCESS_HPP_
#define BOSH_PROCESS_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace bosh {

struct ProcessResult {
  int exit_code = 0;  // 128 + signal number when killed by a signal
  bool timed_out = false;
  double wall_seconds = 0.0;
};

// Runs argv[0] (PATH lookup) in `cwd` with stdin from /dev/null and both
// output streams redirected to files. On timeout the whole process group is
// killed.
ProcessResult run_process(const std::vector<std::string>& argv, const std::filesystem::path& cwd,
                          const std::filesystem::path& stdout_path,
                          const std::filesystem::path& stderr_path,
                          std::optional<double> timeout_seconds);

// Runs argv and returns its standard output, or nullopt if it could not be
// started or exited nonzero.
std::optional<std::string> capture_output(const std::vector<std::string>& argv);

// True if `program` resolves to an executable through PATH.
bool on_path(const std::string& program);

}  // namespace bosh

#endif  // BOSH_PROCESS_HPP_
