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

#include "bosh/executor.hpp"

#include <glob.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include "bosh/process.hpp"
#include "bosh/validator.hpp"

namespace bosh {

namespace fs = std::filesystem;

namespace {

constexpr const char* kShell = "/bin/bash";
constexpr const char* kCaptureDir = ".bosh";

std::vector<std::string> split_words(const std::string& command) {
  std::vector<std::string> words;
  std::istringstream in(command);
  for (std::string word; in >> word;) words.push_back(word);
  return words;
}

// Escapes glob metacharacters; `keep_star` leaves '*' active.
std::string glob_escape(const std::string& text, bool keep_star) {
  std::string out;
  for (const char c : text) {
    if (c == '\\' || c == '[' || c == ']' || c == '?' || (c == '*' && !keep_star)) out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

ExecutionError::ExecutionError(Kind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

std::string_view to_string(Runtime runtime) {
  switch (runtime) {
    case Runtime::kDirect: return "direct";
    case Runtime::kDocker: return "docker";
    case Runtime::kSingularity: return "singularity";
  }
  return "direct";
}

std::optional<Runtime> runtime_from_string(std::string_view name) {
  if (name == "direct") return Runtime::kDirect;
  if (name == "docker") return Runtime::kDocker;
  if (name == "singularity") return Runtime::kSingularity;
  return std::nullopt;
}

std::string_view to_string(OutputStatus status) {
  switch (status) {
    case OutputStatus::kFound: return "found";
    case OutputStatus::kMissing: return "missing";
    case OutputStatus::kMissingOptional: return "missing-optional";
  }
  return "missing";
}

RuntimeSet detect_runtimes() {
  RuntimeSet available{Runtime::kDirect};
  if (on_path("docker")) available.insert(Runtime::kDocker);
  if (on_path("singularity")) available.insert(Runtime::kSingularity);
  return available;
}

RuntimePlan select_runtime(const std::optional<ContainerSpec>& container,
                           const RuntimeSet& available, const std::string& command,
                           const fs::path& workdir, std::optional<Runtime> override_runtime) {
  using Kind = ExecutionError::Kind;
  RuntimePlan plan;
  plan.working_directory = workdir;

  const bool direct = override_runtime ? *override_runtime == Runtime::kDirect : !container;
  if (direct) {
    plan.runtime = Runtime::kDirect;
    plan.argv = {kShell, "-c", command};
    return plan;
  }
  if (!container) {
    throw ExecutionError(Kind::kRuntimeUnavailable,
                         "runtime " + std::string(to_string(*override_runtime)) +
                             " requested but the descriptor declares no container");
  }
  if (container->type == ContainerType::kRootfs) {
    throw ExecutionError(Kind::kRootfsUnsupported,
                         "rootfs containers cannot be launched (chroot execution is unsupported)");
  }

  const Runtime engine = override_runtime.value_or(
      container->type == ContainerType::kDocker ? Runtime::kDocker : Runtime::kSingularity);
  if (available.count(engine) == 0) {
    throw ExecutionError(Kind::kRuntimeUnavailable,
                         std::string(to_string(engine)) + " is not available on this host");
  }
  std::string image = container->image.value_or("");
  if (engine == Runtime::kDocker && container->type == ContainerType::kSingularity) {
    throw ExecutionError(Kind::kRuntimeUnavailable,
                         "a singularity image cannot be run with docker");
  }
  if (engine == Runtime::kSingularity && container->type == ContainerType::kDocker) {
    image = "docker://" + image;
  }

  const std::string host = workdir.string();
  plan.runtime = engine;
  plan.mounts = {{host, host}};
  plan.image_ref = image;
  plan.working_directory = container->working_directory.value_or(host);
  const std::string cwd = plan.working_directory.string();
  const std::vector<std::string> words = split_words(command);

  if (engine == Runtime::kDocker) {
    plan.argv = {"docker", "run", "--rm", "-v", host + ":" + host, "-w", cwd};
    if (container->has_entrypoint()) {
      plan.argv.push_back(image);
      plan.argv.insert(plan.argv.end(), words.begin(), words.end());
    } else {
      plan.argv.insert(plan.argv.end(), {"--entrypoint", kShell, image, "-c", command});
    }
  } else {
    if (container->has_entrypoint()) {
      plan.argv = {"singularity", "run", "-B", host + ":" + host, "--pwd", cwd, image};
      plan.argv.insert(plan.argv.end(), words.begin(), words.end());
    } else {
      plan.argv = {"singularity", "exec", "-B", host + ":" + host, "--pwd", cwd, image,
                   kShell,        "-c",   command};
    }
  }
  return plan;
}

ImageInspector engine_inspector() {
  return [](const RuntimePlan& plan) -> std::optional<std::string> {
    if (!plan.image_ref) return std::nullopt;
    std::optional<std::string> out;
    if (plan.runtime == Runtime::kDocker) {
      out = capture_output({"docker", "image", "inspect", "--format", "{{.Id}}", *plan.image_ref});
    } else if (plan.runtime == Runtime::kSingularity) {
      out = capture_output({"sha256sum", *plan.image_ref});
      if (out) out = "sha256:" + out->substr(0, out->find(' '));
    }
    if (!out) return std::nullopt;
    while (!out->empty() && (out->back() == '\n' || out->back() == ' ')) out->pop_back();
    return out;
  };
}

bool verify_image_hash(const RuntimePlan& plan, const std::optional<std::string>& expected,
                       const ImageInspector& inspector) {
  if (!expected) {
    std::clog << "notice: no image hash declared, image identity not verified\n";
    return true;
  }
  const std::optional<std::string> actual = inspector ? inspector(plan) : std::nullopt;
  return actual && *actual == *expected;
}

namespace {

// glob() lets a wildcard component such as ".*" match "." and "..".
bool wildcard_hit_dot_entry(const std::string& pattern, const std::string& path) {
  std::size_t p = 0;
  std::size_t q = 0;
  while (p <= pattern.size() && q <= path.size()) {
    const std::size_t pe = std::min(pattern.find('/', p), pattern.size());
    const std::size_t qe = std::min(path.find('/', q), path.size());
    const std::string_view part(path.data() + q, qe - q);
    const std::string_view spec(pattern.data() + p, pe - p);
    if ((part == "." || part == "..") && spec != part) return true;
    p = pe + 1;
    q = qe + 1;
  }
  return false;
}

}  // namespace

std::vector<std::string> glob_relative(const fs::path& workdir, const std::string& pattern) {
  const bool absolute = fs::path(pattern).is_absolute();
  std::string prefix;
  if (!absolute) {
    prefix = workdir.string();
    if (!prefix.empty() && prefix.back() != '/') prefix += '/';
  }
  const std::string full = glob_escape(prefix, false) + glob_escape(pattern, true);

  glob_t matches{};
  std::vector<std::string> out;
  if (::glob(full.c_str(), GLOB_NOSORT, nullptr, &matches) == 0) {
    for (std::size_t i = 0; i < matches.gl_pathc; ++i) {
      std::string path = matches.gl_pathv[i];
      if (!absolute && path.rfind(prefix, 0) == 0) path.erase(0, prefix.size());
      if (wildcard_hit_dot_entry(pattern, path)) continue;
      out.push_back(std::move(path));
    }
  }
  ::globfree(&matches);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OutputResult> collect_outputs(const Descriptor& d, const Invocation& invocation,
                                          const fs::path& workdir) {
  const std::vector<ResolvedOutput> resolved = resolve_output_paths(d, invocation);
  std::vector<OutputResult> results;
  for (std::size_t j = 0; j < d.output_files.size(); ++j) {
    const OutputFile& output = d.output_files[j];
    if (output.is_config_file()) continue;
    OutputResult result;
    result.id = output.id;
    if (output.is_list()) {
      result.paths = glob_relative(workdir, resolved[j].path);
    } else {
      const fs::path path(resolved[j].path);
      std::error_code ec;
      if (fs::exists(path.is_absolute() ? path : workdir / path, ec)) {
        result.paths.push_back(resolved[j].path);
      }
    }
    if (!result.paths.empty()) {
      result.status = OutputStatus::kFound;
    } else {
      result.status = output.is_optional() ? OutputStatus::kMissingOptional : OutputStatus::kMissing;
    }
    results.push_back(std::move(result));
  }
  return results;
}

bool ExecutionRecord::missing_mandatory_output() const {
  return std::any_of(outputs.begin(), outputs.end(),
                     [](const OutputResult& o) { return o.status == OutputStatus::kMissing; });
}

bool ExecutionRecord::succeeded() const {
  return exit_code == 0 && !timed_out && !missing_mandatory_output();
}

Json ExecutionRecord::to_json() const {
  Json out = Json::object();
  out["command"] = command;
  out["runtime"] = std::string(to_string(runtime));
  out["exit-code"] = exit_code;
  out["timed-out"] = timed_out;
  out["wall-time"] = wall_seconds;
  out["stdout-path"] = stdout_path.string();
  out["stderr-path"] = stderr_path.string();
  out["outputs"] = Json::array();
  for (const auto& o : outputs) {
    out["outputs"].push_back(
        Json{{"id", o.id}, {"status", std::string(to_string(o.status))}, {"paths", o.paths}});
  }
  out["config-files"] = Json::array();
  for (const auto& c : config_files) {
    out["config-files"].push_back(Json{{"id", c.id}, {"path", c.path}});
  }
  out["missing-mandatory-output"] = missing_mandatory_output();
  out["warnings"] = warnings;
  return out;
}

ExecutionRecord launch(const Descriptor& d, const Invocation& invocation,
                       const ExecOptions& options) {
  using Kind = ExecutionError::Kind;
  const ValidationReport report = validate_descriptor(d);
  if (!report.passed()) {
    std::string message = "descriptor is invalid:";
    for (const auto& v : report.violations) {
      if (v.severity == Severity::kError) message += "\n  " + format_violation(v);
    }
    throw ExecutionError(Kind::kInvalidDescriptor, message);
  }
  if (auto violations = validate_invocation(d, invocation); !violations.empty()) {
    std::string message = "invocation is invalid:";
    for (const auto& v : violations) message += "\n  " + format_violation(v);
    throw ExecutionError(Kind::kInvalidInvocation, message);
  }

  CommandLinePlan plan;
  try {
    plan = build_plan(d, invocation);
  } catch (const PlanError& e) {
    throw ExecutionError(Kind::kPlan, e.what());
  }

  std::error_code ec;
  const fs::path workdir = fs::canonical(options.workdir, ec);
  if (ec || !fs::is_directory(workdir)) {
    throw ExecutionError(Kind::kIo, "working directory " + options.workdir.string() +
                                        " does not exist");
  }

  const RuntimeSet available = options.available.value_or(detect_runtimes());
  const RuntimePlan runtime =
      select_runtime(d.container, available, plan.command, workdir, options.runtime_override);
  if (runtime.runtime != Runtime::kDirect) {
    const ImageInspector inspector = options.inspector ? options.inspector : engine_inspector();
    const std::optional<std::string> expected =
        d.container ? d.container->image_hash : std::nullopt;
    if (!verify_image_hash(runtime, expected, inspector)) {
      throw ExecutionError(Kind::kImageHashMismatch,
                           "image " + runtime.image_ref.value_or("") +
                               " does not match declared hash " + expected.value_or(""));
    }
  }

  for (const auto& config : plan.config_files) {
    const fs::path target = workdir / config.path;
    fs::create_directories(target.parent_path(), ec);
    std::ofstream out(target, std::ios::binary | std::ios::trunc);
    out << config.content;
    if (!out) throw ExecutionError(Kind::kIo, "cannot write " + target.string());
  }

  ExecutionRecord record;
  record.command = plan.command;
  record.runtime = runtime.runtime;
  record.config_files = plan.config_files;
  record.warnings = plan.warnings;
  const fs::path capture = workdir / kCaptureDir;
  fs::create_directories(capture, ec);
  if (ec) throw ExecutionError(Kind::kIo, "cannot create " + capture.string());
  record.stdout_path = capture / "stdout.txt";
  record.stderr_path = capture / "stderr.txt";

  // Engines run from the host workdir; the in-container cwd is in argv.
  const fs::path host_cwd = runtime.runtime == Runtime::kDirect ? runtime.working_directory
                                                                : workdir;
  ProcessResult result;
  try {
    result = run_process(runtime.argv, host_cwd, record.stdout_path, record.stderr_path,
                         options.timeout_seconds);
  } catch (const std::exception& e) {
    throw ExecutionError(Kind::kIo, e.what());
  }
  record.exit_code = result.exit_code;
  record.timed_out = result.timed_out;
  record.wall_seconds = result.wall_seconds;
  record.outputs = collect_outputs(d, invocation, workdir);
  return record;
}

}  // namespace bosh
