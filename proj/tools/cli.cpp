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

#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "bosh/descriptor.hpp"
#include "bosh/executor.hpp"
#include "bosh/importer.hpp"
#include "bosh/invocation_schema.hpp"
#include "bosh/simulator.hpp"
#include "bosh/validator.hpp"

namespace bosh::cli {

namespace {

const std::string kVersionText =
    std::string("bosh ") + BOSH_VERSION + " (descriptor schema " + std::string(kSchemaVersion) + ")";

struct Options {
  std::string descriptor_path;
  std::string invocation_path;
  bool json = false;
  std::optional<std::uint64_t> seed;
  bool dump_invocation = false;
  bool dump_config = false;
  std::string workdir = ".";
  std::string runtime;
  std::optional<double> timeout;
  std::string app_name;
  std::string image;
  std::string app_version = kBidsDefaultVersion;
  std::string output_path;
};

// Reads, parses and validates a descriptor; prints diagnostics and returns
// nullopt on any problem.
std::optional<Descriptor> load_descriptor(const std::string& path, std::ostream& err) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return std::nullopt;
  }
  const ValidationReport report = validate(text);
  if (!report.passed()) {
    err << "error: descriptor " << path << " is invalid\n" << format_report(report);
    return std::nullopt;
  }
  return parse_descriptor(text);
}

std::optional<Json> load_json(const std::string& path, std::ostream& err) {
  try {
    return parse_json_text(read_text_file(path));
  } catch (const std::exception& e) {
    err << "error: " << path << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

void print_violations(const std::vector<Violation>& violations, std::ostream& os) {
  for (const auto& v : violations) os << format_violation(v) << "\n";
}

int run_validate(const Options& opts, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    text = read_text_file(opts.descriptor_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const ValidationReport report = validate(text);
  if (opts.json) {
    out << report_to_json(report).dump(2) << "\n";
  } else {
    out << format_report(report);
    if (report.passed()) err << opts.descriptor_path << ": valid\n";
  }
  return report.passed() ? kSuccess : kFailure;
}

int run_invocation(const Options& opts, std::ostream& out, std::ostream& err) {
  const auto descriptor = load_descriptor(opts.descriptor_path, err);
  if (!descriptor) return kUsage;
  if (opts.invocation_path.empty()) {
    out << generate_invocation_schema(*descriptor).dump(2) << "\n";
    return kSuccess;
  }
  const auto invocation = load_json(opts.invocation_path, err);
  if (!invocation) return kUsage;
  const std::vector<Violation> violations = validate_invocation(*descriptor, *invocation);
  print_violations(violations, out);
  if (violations.empty()) err << opts.invocation_path << ": valid\n";
  return violations.empty() ? kSuccess : kFailure;
}

int run_simulate(const Options& opts, std::ostream& out, std::ostream& err) {
  const auto descriptor = load_descriptor(opts.descriptor_path, err);
  if (!descriptor) return kUsage;
  std::optional<Invocation> invocation;
  std::optional<std::uint64_t> seed = opts.seed;
  if (!opts.invocation_path.empty()) {
    invocation = load_json(opts.invocation_path, err);
    if (!invocation) return kUsage;
  } else if (!seed) {
    seed = 0;
  }
  try {
    const Simulation sim = simulate_plan(*descriptor, invocation, seed);
    out << sim.plan.command << "\n";
    if (opts.dump_invocation) out << sim.invocation.dump(2) << "\n";
    if (opts.dump_config) {
      Json configs = Json::array();
      for (const auto& c : sim.plan.config_files) {
        configs.push_back(Json{{"id", c.id}, {"path", c.path}, {"content", c.content}});
      }
      out << Json{{"config-files", configs}}.dump(2) << "\n";
    }
    for (const auto& warning : sim.plan.warnings) err << "warning: " << warning << "\n";
    return kSuccess;
  } catch (const InvalidInvocationError& e) {
    err << "error: invocation is invalid\n";
    print_violations(e.violations(), err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kFailure;
}

int run_launch(const Options& opts, std::ostream& out, std::ostream& err) {
  const auto descriptor = load_descriptor(opts.descriptor_path, err);
  if (!descriptor) return kUsage;
  const auto invocation = load_json(opts.invocation_path, err);
  if (!invocation) return kUsage;

  ExecOptions exec;
  exec.workdir = opts.workdir;
  exec.timeout_seconds = opts.timeout;
  std::string runtime_name = opts.runtime;
  if (runtime_name.empty()) {
    if (const char* env = std::getenv("BOSH_RUNTIME"); env != nullptr) runtime_name = env;
  }
  if (!runtime_name.empty()) {
    exec.runtime_override = runtime_from_string(runtime_name);
    if (!exec.runtime_override) {
      err << "error: unknown runtime \"" << runtime_name << "\"\n";
      return kUsage;
    }
  }

  try {
    const ExecutionRecord record = launch(*descriptor, *invocation, exec);
    out << record.to_json().dump(2) << "\n";
    for (const auto& warning : record.warnings) err << "warning: " << warning << "\n";
    if (record.timed_out) err << "error: command timed out\n";
    if (record.missing_mandatory_output()) err << "error: mandatory output missing\n";
    return record.succeeded() ? kSuccess : kFailure;
  } catch (const ExecutionError& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ExecutionError::Kind::kInvalidDescriptor:
      case ExecutionError::Kind::kInvalidInvocation:
      case ExecutionError::Kind::kIo: return kUsage;
      default: return kFailure;
    }
  }
}

int run_import_bids(const Options& opts, std::ostream& out, std::ostream& err) {
  Descriptor descriptor;
  try {
    descriptor = import_bids(opts.app_name, opts.image, opts.app_version);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const std::string text = serialize_descriptor(descriptor).dump(2) + "\n";
  if (opts.output_path.empty()) {
    out << text;
    return kSuccess;
  }
  std::ofstream file(opts.output_path, std::ios::binary | std::ios::trunc);
  file << text;
  if (!file) {
    err << "error: cannot write " << opts.output_path << "\n";
    return kUsage;
  }
  return kSuccess;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Validate, simulate and execute applications described by JSON descriptors.",
               "bosh"};
  app.set_version_flag("--version", kVersionText);
  app.require_subcommand(1);

  auto* validate_cmd = app.add_subcommand("validate", "Check a descriptor");
  validate_cmd->add_option("descriptor", opts.descriptor_path, "Descriptor JSON file")->required();
  validate_cmd->add_flag("--json", opts.json, "Print a machine-readable report");

  auto* invocation_cmd = app.add_subcommand(
      "invocation", "Print the invocation schema, or validate an invocation with -i");
  invocation_cmd->add_option("descriptor", opts.descriptor_path, "Descriptor JSON file")
      ->required();
  invocation_cmd->add_option("-i,--invocation", opts.invocation_path, "Invocation JSON file");

  auto* simulate_cmd = app.add_subcommand("simulate", "Print the command line without running it");
  simulate_cmd->add_option("descriptor", opts.descriptor_path, "Descriptor JSON file")->required();
  auto* inv_opt =
      simulate_cmd->add_option("-i,--invocation", opts.invocation_path, "Invocation JSON file");
  auto* seed_opt =
      simulate_cmd->add_option("--seed", opts.seed, "Seed for a random invocation (default 0)");
  inv_opt->excludes(seed_opt);
  simulate_cmd->add_flag("--dump-invocation", opts.dump_invocation,
                         "Also print the invocation JSON");
  simulate_cmd->add_flag("--dump-config", opts.dump_config,
                         "Also print rendered configuration files as JSON");

  auto* exec_cmd = app.add_subcommand("exec", "Execute applications");
  exec_cmd->require_subcommand(1);
  auto* launch_cmd = exec_cmd->add_subcommand("launch", "Run a descriptor with an invocation");
  launch_cmd->add_option("descriptor", opts.descriptor_path, "Descriptor JSON file")->required();
  launch_cmd->add_option("invocation", opts.invocation_path, "Invocation JSON file")->required();
  launch_cmd->add_option("--workdir", opts.workdir, "Working directory (default: current)");
  launch_cmd->add_option("--runtime", opts.runtime, "Force a runtime (overrides BOSH_RUNTIME)")
      ->check(CLI::IsMember({"direct", "docker", "singularity"}));
  launch_cmd->add_option("--timeout", opts.timeout, "Kill the command after S seconds")
      ->check(CLI::PositiveNumber);

  auto* import_cmd = app.add_subcommand("import", "Create descriptors from app collections");
  import_cmd->require_subcommand(1);
  auto* bids_cmd = import_cmd->add_subcommand("bids", "Descriptor for a BIDS app");
  bids_cmd->add_option("name", opts.app_name, "Application name")->required();
  bids_cmd->add_option("image", opts.image, "Docker image")->required();
  bids_cmd->add_option("--version", opts.app_version, "Application version");
  bids_cmd->add_option("-o,--output", opts.output_path, "Write the descriptor to a file");

  if (!args.empty() && !args.front().empty() && args.front().front() != '-') {
    const auto subcommands = app.get_subcommands([](CLI::App*) { return true; });
    const bool known = std::any_of(subcommands.begin(), subcommands.end(),
                                   [&](const CLI::App* s) { return s->check_name(args.front()); });
    if (!known) {
      err << "error: unknown subcommand \"" << args.front() << "\"\n\n" << app.help();
      return kUsage;
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  if (validate_cmd->parsed()) return run_validate(opts, out, err);
  if (invocation_cmd->parsed()) return run_invocation(opts, out, err);
  if (simulate_cmd->parsed()) return run_simulate(opts, out, err);
  if (launch_cmd->parsed()) return run_launch(opts, out, err);
  if (bids_cmd->parsed()) return run_import_bids(opts, out, err);
  err << app.help();
  return kUsage;
}

}  // namespace bosh::cli
