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

// Descriptor data model: the parsed form of an application description
// (command-line template, inputs, outputs, groups, container, resources and
// custom properties), plus lossless JSON parsing and serialization.

#ifndef BOSH_DESCRIPTOR_HPP_
#define BOSH_DESCRIPTOR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bosh/json_util.hpp"

namespace bosh {

inline constexpr std::string_view kSchemaVersion = "0.5";
inline constexpr std::string_view kDefaultSeparator = " ";

enum class InputType { kString, kNumber, kFlag, kFile };

std::string_view to_string(InputType type);
std::optional<InputType> input_type_from_string(std::string_view name);

struct Input {
  std::string id;
  std::string name;
  InputType type = InputType::kString;
  std::optional<bool> optional;
  std::optional<std::string> description;
  std::optional<std::string> value_key;
  std::optional<std::string> command_line_flag;
  std::optional<std::string> command_line_separator;
  std::optional<Json> default_value;
  std::optional<bool> list;
  std::optional<std::vector<Json>> value_choices;
  std::optional<Json> minimum;
  std::optional<Json> maximum;
  std::optional<bool> exclusive_minimum;
  std::optional<bool> exclusive_maximum;
  std::optional<std::vector<std::string>> requires_inputs;
  std::optional<std::vector<std::string>> disables_inputs;
  // Keys not part of the input grammar, kept so serialization is lossless.
  Json extra = Json::object();

  bool is_optional() const { return optional.value_or(false); }
  bool is_list() const { return list.value_or(false); }
  bool is_exclusive_minimum() const { return exclusive_minimum.value_or(false); }
  bool is_exclusive_maximum() const { return exclusive_maximum.value_or(false); }
  std::string separator() const {
    return command_line_separator.value_or(std::string(kDefaultSeparator));
  }
  const std::vector<std::string>& required_ids() const;
  const std::vector<std::string>& disabled_ids() const;

  bool operator==(const Input&) const = default;
};

struct OutputFile {
  std::string id;
  std::string name;
  std::optional<std::string> description;
  std::string path_template;
  std::optional<std::vector<std::string>> stripped_extensions;
  std::optional<std::string> value_key;
  std::optional<std::string> command_line_flag;
  std::optional<std::string> command_line_separator;
  std::optional<bool> optional;
  std::optional<bool> list;
  // One entry per line; presence marks the output as a configuration file.
  std::optional<std::vector<std::string>> file_template;
  Json extra = Json::object();

  bool is_optional() const { return optional.value_or(false); }
  bool is_list() const { return list.value_or(false); }
  bool is_config_file() const { return file_template.has_value(); }
  std::string separator() const {
    return command_line_separator.value_or(std::string(kDefaultSeparator));
  }
  const std::vector<std::string>& extensions() const;

  bool operator==(const OutputFile&) const = default;
};

struct Group {
  std::string id;
  std::string name;
  std::vector<std::string> members;
  std::optional<bool> mutually_exclusive;
  std::optional<bool> one_is_required;
  std::optional<bool> all_or_none;
  Json extra = Json::object();

  bool is_mutually_exclusive() const { return mutually_exclusive.value_or(false); }
  bool is_one_is_required() const { return one_is_required.value_or(false); }
  bool is_all_or_none() const { return all_or_none.value_or(false); }

  bool operator==(const Group&) const = default;
};

enum class ContainerType { kDocker, kSingularity, kRootfs };

std::string_view to_string(ContainerType type);
std::optional<ContainerType> container_type_from_string(std::string_view name);

struct ContainerSpec {
  ContainerType type = ContainerType::kDocker;
  std::optional<std::string> image;
  std::optional<std::string> url;
  std::optional<std::string> working_directory;
  std::optional<bool> entrypoint;
  std::optional<std::string> image_hash;
  Json extra = Json::object();

  bool has_entrypoint() const { return entrypoint.value_or(false); }

  bool operator==(const ContainerSpec&) const = default;
};

// Advisory only; nothing in the toolchain enforces these.
struct SuggestedResources {
  std::optional<Json> cpu_cores;
  std::optional<Json> nodes;
  std::optional<Json> ram;
  std::optional<Json> disk_space;
  std::optional<Json> walltime_estimate;
  Json extra = Json::object();

  bool operator==(const SuggestedResources&) const = default;
};

struct Descriptor {
  std::string name;
  std::string tool_version;
  std::string description;
  std::string schema_version;
  std::string command_line;
  std::vector<Input> inputs;
  std::vector<OutputFile> output_files;
  std::optional<std::vector<Group>> groups;
  std::optional<ContainerSpec> container;
  std::optional<SuggestedResources> suggested_resources;
  std::optional<Json> custom;
  std::optional<Json> invocation_schema;
  // Unknown top-level keys; the validator reports them, the model keeps them.
  Json extra = Json::object();

  const Input* find_input(std::string_view id) const;
  const OutputFile* find_output(std::string_view id) const;
  const std::vector<Group>& group_list() const;

  bool operator==(const Descriptor&) const = default;
};

// A problem found while reading a descriptor document. `blocking` issues
// prevent building a well-typed model (syntax, missing field, wrong JSON type,
// unknown enum value); the others are grammar violations the model can still
// carry (unknown keys, wrong schema version, empty strings, ...).
struct StructuralIssue {
  std::string code;
  std::string location;
  std::string message;
  bool blocking = true;
};

struct DescriptorReadResult {
  std::optional<Descriptor> descriptor;
  std::vector<StructuralIssue> issues;
};

// Reads a descriptor without throwing, reporting every structural issue.
DescriptorReadResult read_descriptor(std::string_view text);
DescriptorReadResult read_descriptor_json(const Json& document);

class DescriptorError : public std::runtime_error {
 public:
  explicit DescriptorError(std::vector<StructuralIssue> issues);

  const std::vector<StructuralIssue>& issues() const { return issues_; }

 private:
  std::vector<StructuralIssue> issues_;
};

class JsonSyntaxError : public DescriptorError {
 public:
  JsonSyntaxError(std::string message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Parses text into a JSON value, reporting syntax errors with a
// 1-based line and column.
Json parse_json_text(std::string_view text);

// Throws JsonSyntaxError on malformed JSON and DescriptorError when a blocking
// structural issue exists. Non-blocking issues are left to the validator.
Descriptor parse_descriptor(std::string_view text);
Descriptor parse_descriptor_json(const Json& document);

// Keys are emitted in declaration order and absent optionals are omitted.
Json serialize_descriptor(const Descriptor& descriptor);

std::string read_text_file(const std::string& path);

}  // namespace bosh

#endif  // BOSH_DESCRIPTOR_HPP_
