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

// Launch mode: write configuration files, run the command directly or in a
// container engine, capture streams, and collect declared outputs.

#ifndef BOSH_EXECUTOR_HPP_
#define BOSH_EXECUTOR_HPP_

#include <filesystem>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bosh/command_builder.hpp"
#include "bosh/descriptor.hpp"
#include "bosh/invocation_schema.hpp"

namespace bosh {

enum class Runtime { kDirect, kDocker, kSingularity };

std::string_view to_string(Runtime runtime);
std::optional<Runtime> runtime_from_string(std::string_view name);

using RuntimeSet = std::set<Runtime>;

// Direct is always available; engines are detected on PATH.
RuntimeSet detect_runtimes();

struct Mount {
  std::string host;
  std::string container;

  bool operator==(const Mount&) const = default;
};

struct RuntimePlan {
  Runtime runtime = Runtime::kDirect;
  std::vector<std::string> argv;
  std::vector<Mount> mounts;
  std::filesystem::path working_directory;  // inside the runtime
  std::optional<std::string> image_ref;
};

class ExecutionError : public std::runtime_error {
 public:
  enum class Kind {
    kInvalidDescriptor,
    kInvalidInvocation,
    kRuntimeUnavailable,
    kRootfsUnsupported,
    kImageHashMismatch,
    kPlan,
    kIo,
  };

  ExecutionError(Kind kind, const std::string& message);

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Picks the runtime and builds the full argument vector that runs `command`.
// No container -> direct. A requested engine that is not available is an
// error; there is no fallback. rootfs images are rejected.
// `override_runtime` forces a runtime (direct ignores the container spec).
RuntimePlan select_runtime(const std::optional<ContainerSpec>& container,
                           const RuntimeSet& available, const std::string& command,
                           const std::filesystem::path& workdir,
                           std::optional<Runtime> override_runtime = std::nullopt);

// Returns the engine-reported digest of the plan's image, nullopt on failure.
using ImageInspector = std::function<std::optional<std::string>(const RuntimePlan&)>;

// `docker image inspect` for docker plans, sha256 of the image file for
// singularity plans.
ImageInspector engine_inspector();

// True iff the inspected digest equals `expected`. An absent expectation is
// vacuously true. Inspection failure counts as a mismatch.
bool verify_image_hash(const RuntimePlan& plan, const std::optional<std::string>& expected,
                       const ImageInspector& inspector);

enum class OutputStatus { kFound, kMissing, kMissingOptional };

std::string_view to_string(OutputStatus status);

struct OutputResult {
  std::string id;
  OutputStatus status = OutputStatus::kMissing;
  std::vector<std::string> paths;  // relative to the working directory

  bool operator==(const OutputResult&) const = default;
};

// Non-configuration outputs in descriptor order. List outputs are globbed
// ('*' is the only wildcard), matches sorted lexicographically.
std::vector<OutputResult> collect_outputs(const Descriptor& descriptor,
                                          const Invocation& invocation,
                                          const std::filesystem::path& workdir);

// Matches `pattern` ('*' wildcard, relative to `workdir`) against the
// filesystem. Sorted.
std::vector<std::string> glob_relative(const std::filesystem::path& workdir,
                                       const std::string& pattern);

struct ExecOptions {
  std::filesystem::path workdir = ".";
  std::optional<Runtime> runtime_override;
  std::optional<double> timeout_seconds;
  // Defaults to detect_runtimes() / engine_inspector() when unset.
  std::optional<RuntimeSet> available;
  ImageInspector inspector;
};

struct ExecutionRecord {
  std::string command;
  Runtime runtime = Runtime::kDirect;
  int exit_code = 0;
  bool timed_out = false;
  double wall_seconds = 0.0;
  std::filesystem::path stdout_path;
  std::filesystem::path stderr_path;
  std::vector<OutputResult> outputs;
  std::vector<ConfigFile> config_files;
  std::vector<std::string> warnings;

  bool missing_mandatory_output() const;
  // Exit code 0, no timeout and every mandatory output found.
  bool succeeded() const;
  Json to_json() const;
};

// Validates, plans, writes configuration files, selects the runtime, checks
// the image hash, then runs the command through bash. Pre-launch failures
// throw ExecutionError and start no process. A nonzero exit still collects
// outputs.
ExecutionRecord launch(const Descriptor& descriptor, const Invocation& invocation,
                       const ExecOptions& options);

}  // namespace bosh

#endif  // BOSH_EXECUTOR_HPP_
