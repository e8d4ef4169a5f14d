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

// Command-line construction: value-key substitution into the command line,
// output path templates and configuration-file templates.

#ifndef BOSH_COMMAND_BUILDER_HPP_
#define BOSH_COMMAND_BUILDER_HPP_

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bosh/descriptor.hpp"
#include "bosh/invocation_schema.hpp"

namespace bosh {

struct ResolvedOutput {
  std::string id;
  std::string path;  // list outputs keep their '*'
  bool list = false;

  bool operator==(const ResolvedOutput&) const = default;
};

struct ConfigFile {
  std::string id;
  std::string path;
  std::string content;

  bool operator==(const ConfigFile&) const = default;
};

struct CommandLinePlan {
  std::string command;
  std::vector<ResolvedOutput> resolved_outputs;
  std::vector<ConfigFile> config_files;
  std::vector<std::string> residual_keys;  // always empty on a returned plan
  std::vector<std::string> warnings;

  bool operator==(const CommandLinePlan&) const = default;
};

class PlanError : public std::runtime_error {
 public:
  enum class Kind { kResidualKeys, kUnsafePath };

  PlanError(Kind kind, std::string message, std::vector<std::string> residual_keys = {});

  Kind kind() const { return kind_; }
  const std::vector<std::string>& residual_keys() const { return residual_keys_; }

 private:
  Kind kind_;
  std::vector<std::string> residual_keys_;
};

// Removes listed extensions that occur as suffixes, repeatedly, until none of
// them is a suffix any more.
std::string strip_extensions(std::string_view value, std::span<const std::string> extensions);

// Value text without flag: strings verbatim, numbers via render_number, list
// elements joined by single spaces.
std::string render_value(const Json& value);

// Command-line token of an input: Flag true -> flag, Flag false -> "",
// otherwise [flag + separator +] value (once for lists).
std::string render_input_token(const Input& input, const Json& value);

// Copy of `invocation` with default values filled in for absent inputs.
Invocation with_defaults(const Descriptor& descriptor, const Invocation& invocation);

// Full substitution. Throws PlanError on leftover value-keys or on a
// configuration file path that is absolute or contains a ".." component.
CommandLinePlan build_plan(const Descriptor& descriptor, const Invocation& invocation);

// Output path templates after input and absent-key substitution.
std::vector<ResolvedOutput> resolve_output_paths(const Descriptor& descriptor,
                                                 const Invocation& invocation);

// All value-keys declared by inputs and outputs, in source order, deduplicated.
std::vector<std::string> declared_value_keys(const Descriptor& descriptor);

}  // namespace bosh

#endif  // BOSH_COMMAND_BUILDER_HPP_
