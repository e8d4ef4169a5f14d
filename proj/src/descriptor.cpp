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

#include "bosh/descriptor.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <utility>

#include "bosh/violation.hpp"

namespace bosh {

// ---------------------------------------------------------------------------
// JSON helpers

std::string render_number(const Json& number) {
  if (number.is_number_unsigned()) return std::to_string(number.get<std::uint64_t>());
  if (number.is_number_integer()) return std::to_string(number.get<std::int64_t>());
  const double value = number.get<double>();
  if (std::isfinite(value) && std::trunc(value) == value && std::fabs(value) < 9007199254740992.0) {
    return std::to_string(static_cast<std::int64_t>(value));
  }
  std::array<char, 64> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), result.ptr);
}

std::string path_key(const std::string& parent, const std::string& key) {
  return parent + "." + key;
}

std::string path_index(const std::string& parent, std::size_t index) {
  return parent + "[" + std::to_string(index) + "]";
}

std::string_view to_string(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

bool has_errors(const std::vector<Violation>& violations) {
  return std::any_of(violations.begin(), violations.end(),
                     [](const Violation& v) { return v.severity == Severity::kError; });
}

std::string format_violation(const Violation& v) {
  std::string line(to_string(v.severity));
  line += ' ';
  line += v.rule_id;
  line += ' ';
  line += v.location;
  line += ' ';
  line += v.message;
  return line;
}

Json violation_to_json(const Violation& v) {
  Json out = Json::object();
  out["rule-id"] = v.rule_id;
  out["severity"] = std::string(to_string(v.severity));
  out["location"] = v.location;
  out["message"] = v.message;
  return out;
}

// ---------------------------------------------------------------------------
// Enumerations

std::string_view to_string(InputType type) {
  switch (type) {
    case InputType::kString: return "String";
    case InputType::kNumber: return "Number";
    case InputType::kFlag: return "Flag";
    case InputType::kFile: return "File";
  }
  return "String";
}

std::optional<InputType> input_type_from_string(std::string_view name) {
  if (name == "String") return InputType::kString;
  if (name == "Number") return InputType::kNumber;
  if (name == "Flag") return InputType::kFlag;
  if (name == "File") return InputType::kFile;
  return std::nullopt;
}

std::string_view to_string(ContainerType type) {
  switch (type) {
    case ContainerType::kDocker: return "docker";
    case ContainerType::kSingularity: return "singularity";
    case ContainerType::kRootfs: return "rootfs";
  }
  return "docker";
}

std::optional<ContainerType> container_type_from_string(std::string_view name) {
  if (name == "docker") return ContainerType::kDocker;
  if (name == "singularity") return ContainerType::kSingularity;
  if (name == "rootfs") return ContainerType::kRootfs;
  return std::nullopt;
}

namespace {
const std::vector<std::string> kNoIds;
const std::vector<Group> kNoGroups;
}  // namespace

const std::vector<std::string>& Input::required_ids() const {
  return requires_inputs ? *requires_inputs : kNoIds;
}

const std::vector<std::string>& Input::disabled_ids() const {
  return disables_inputs ? *disables_inputs : kNoIds;
}

const std::vector<std::string>& OutputFile::extensions() const {
  return stripped_extensions ? *stripped_extensions : kNoIds;
}

const Input* Descriptor::find_input(std::string_view id) const {
  for (const auto& input : inputs) {
    if (input.id == id) return &input;
  }
  return nullptr;
}

const OutputFile* Descriptor::find_output(std::string_view id) const {
  for (const auto& output : output_files) {
    if (output.id == id) return &output;
  }
  return nullptr;
}

const std::vector<Group>& Descriptor::group_list() const {
  return groups ? *groups : kNoGroups;
}

// ---------------------------------------------------------------------------
// Errors

namespace {

std::string join_issues(const std::vector<StructuralIssue>& issues) {
  std::string text;
  for (const auto& issue : issues) {
    if (!text.empty()) text += "; ";
    text += issue.location + ": " + issue.message;
  }
  return text.empty() ? "invalid descriptor" : text;
}

}  // namespace

DescriptorError::DescriptorError(std::vector<StructuralIssue> issues)
    : std::runtime_error(join_issues(issues)), issues_(std::move(issues)) {}

JsonSyntaxError::JsonSyntaxError(std::string message, std::size_t line, std::size_t column)
    : DescriptorError({StructuralIssue{"STRUCT-PARSE", "$",
                                       "line " + std::to_string(line) + ", column " +
                                           std::to_string(column) + ": " + message,
                                       true}}),
      line_(line),
      column_(column) {}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is the 1-based offset of the last character read.
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string message = e.what();
    if (const auto pos = message.find("syntax error"); pos != std::string::npos) {
      message = message.substr(pos);
    }
    throw JsonSyntaxError(message, line, column);
  }
}

// ---------------------------------------------------------------------------
// Reading

namespace {

enum class Kind { kString, kBool, kNumber, kArray, kObject, kAny };

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::kString: return "a string";
    case Kind::kBool: return "a boolean";
    case Kind::kNumber: return "a number";
    case Kind::kArray: return "an array";
    case Kind::kObject: return "an object";
    case Kind::kAny: return "a value";
  }
  return "a value";
}

bool is_kind(const Json& value, Kind kind) {
  switch (kind) {
    case Kind::kString: return value.is_string();
    case Kind::kBool: return value.is_boolean();
    case Kind::kNumber: return value.is_number();
    case Kind::kArray: return value.is_array();
    case Kind::kObject: return value.is_object();
    case Kind::kAny: return true;
  }
  return false;
}

std::string_view json_type_name(const Json& value) {
  if (value.is_number()) return "number";
  return value.type_name();
}

class Reader {
 public:
  void issue(std::string code, std::string location, std::string message, bool blocking) {
    issues_.push_back({std::move(code), std::move(location), std::move(message), blocking});
  }

  // Returns the member when present with the expected JSON type, else records
  // a missing/type issue and returns nullptr.
  const Json* field(const Json& object, const std::string& location, const std::string& key,
                    Kind kind, bool required) {
    const auto it = object.find(key);
    const std::string where = path_key(location, key);
    if (it == object.end()) {
      if (required) issue("STRUCT-MISSING", where, "required field \"" + key + "\" is missing", true);
      return nullptr;
    }
    if (!is_kind(*it, kind)) {
      issue("STRUCT-TYPE", where,
            "expected " + std::string(kind_name(kind)) + ", got " + std::string(json_type_name(*it)),
            true);
      return nullptr;
    }
    return &*it;
  }

  std::optional<std::string> string_field(const Json& object, const std::string& location,
                                          const std::string& key, bool required,
                                          bool non_empty = false) {
    const Json* value = field(object, location, key, Kind::kString, required);
    if (value == nullptr) return std::nullopt;
    std::string text = value->get<std::string>();
    if (non_empty && text.empty()) {
      issue("STRUCT-EMPTY", path_key(location, key), "must not be empty", false);
    }
    return text;
  }

  std::optional<bool> bool_field(const Json& object, const std::string& location,
                                 const std::string& key) {
    const Json* value = field(object, location, key, Kind::kBool, false);
    if (value == nullptr) return std::nullopt;
    return value->get<bool>();
  }

  std::optional<Json> number_field(const Json& object, const std::string& location,
                                   const std::string& key) {
    const Json* value = field(object, location, key, Kind::kNumber, false);
    if (value == nullptr) return std::nullopt;
    return *value;
  }

  std::optional<std::vector<std::string>> string_list(const Json& object,
                                                      const std::string& location,
                                                      const std::string& key, bool required) {
    const Json* value = field(object, location, key, Kind::kArray, required);
    if (value == nullptr) return std::nullopt;
    std::vector<std::string> items;
    bool ok = true;
    for (std::size_t i = 0; i < value->size(); ++i) {
      const Json& item = (*value)[i];
      if (!item.is_string()) {
        issue("STRUCT-TYPE", path_index(path_key(location, key), i),
              "expected a string, got " + std::string(json_type_name(item)), true);
        ok = false;
        continue;
      }
      items.push_back(item.get<std::string>());
    }
    if (!ok) return std::nullopt;
    return items;
  }

  Json unknown_keys(const Json& object, const std::string& location,
                    std::initializer_list<std::string_view> known) {
    Json extra = Json::object();
    for (auto it = object.begin(); it != object.end(); ++it) {
      if (std::find(known.begin(), known.end(), it.key()) != known.end()) continue;
      issue("STRUCT-UNKNOWN-KEY", path_key(location, it.key()),
            "unknown property \"" + it.key() + "\"", false);
      extra[it.key()] = it.value();
    }
    return extra;
  }

  bool blocked() const {
    return std::any_of(issues_.begin(), issues_.end(),
                       [](const StructuralIssue& i) { return i.blocking; });
  }

  std::vector<StructuralIssue> take() { return std::move(issues_); }

 private:
  std::vector<StructuralIssue> issues_;
};

bool value_matches_type(const Json& value, InputType type) {
  switch (type) {
    case InputType::kString:
    case InputType::kFile: return value.is_string();
    case InputType::kNumber: return value.is_number();
    case InputType::kFlag: return value.is_boolean();
  }
  return false;
}

void check_typed_value(Reader& reader, const Json& value, InputType type, bool list,
                       const std::string& location) {
  if (list && type != InputType::kFlag) {
    if (!value.is_array()) {
      reader.issue("STRUCT-VALUE-TYPE", location,
                   "list input values must be arrays of " + std::string(to_string(type)), false);
      return;
    }
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (!value_matches_type(value[i], type)) {
        reader.issue("STRUCT-VALUE-TYPE", path_index(location, i),
                     "value does not match input type " + std::string(to_string(type)), false);
      }
    }
    return;
  }
  if (!value_matches_type(value, type)) {
    reader.issue("STRUCT-VALUE-TYPE", location,
                 "value does not match input type " + std::string(to_string(type)), false);
  }
}

std::optional<Input> read_input(Reader& reader, const Json& node, const std::string& location) {
  if (!node.is_object()) {
    reader.issue("STRUCT-TYPE", location, "expected an object", true);
    return std::nullopt;
  }
  Input input;
  auto id = reader.string_field(node, location, "id", true, true);
  auto name = reader.string_field(node, location, "name", true, true);
  std::optional<InputType> type;
  if (const Json* t = reader.field(node, location, "type", Kind::kString, true)) {
    type = input_type_from_string(t->get<std::string>());
    if (!type) {
      reader.issue("STRUCT-ENUM", path_key(location, "type"),
                   "type \"" + t->get<std::string>() +
                       "\" is not one of String, Number, Flag, File",
                   true);
    }
  }
  input.optional = reader.bool_field(node, location, "optional");
  input.description = reader.string_field(node, location, "description", false);
  input.value_key = reader.string_field(node, location, "value-key", false, true);
  input.command_line_flag = reader.string_field(node, location, "command-line-flag", false, true);
  input.command_line_separator =
      reader.string_field(node, location, "command-line-separator", false);
  if (const Json* d = reader.field(node, location, "default-value", Kind::kAny, false)) {
    input.default_value = *d;
  }
  input.list = reader.bool_field(node, location, "list");
  if (const Json* c = reader.field(node, location, "value-choices", Kind::kArray, false)) {
    input.value_choices = std::vector<Json>(c->begin(), c->end());
  }
  input.minimum = reader.number_field(node, location, "minimum");
  input.maximum = reader.number_field(node, location, "maximum");
  input.exclusive_minimum = reader.bool_field(node, location, "exclusive-minimum");
  input.exclusive_maximum = reader.bool_field(node, location, "exclusive-maximum");
  input.requires_inputs = reader.string_list(node, location, "requires-inputs", false);
  input.disables_inputs = reader.string_list(node, location, "disables-inputs", false);
  input.extra = reader.unknown_keys(
      node, location,
      {"id", "name", "type", "optional", "description", "value-key", "command-line-flag",
       "command-line-separator", "default-value", "list", "value-choices", "minimum", "maximum",
       "exclusive-minimum", "exclusive-maximum", "requires-inputs", "disables-inputs"});

  if (input.minimum && input.maximum &&
      input.minimum->get<double>() > input.maximum->get<double>()) {
    reader.issue("STRUCT-RANGE", location, "minimum is greater than maximum", false);
  }
  if (type) {
    if (input.default_value) {
      check_typed_value(reader, *input.default_value, *type, input.is_list(),
                        path_key(location, "default-value"));
    }
    if (input.value_choices) {
      for (std::size_t i = 0; i < input.value_choices->size(); ++i) {
        check_typed_value(reader, (*input.value_choices)[i], *type, false,
                          path_index(path_key(location, "value-choices"), i));
      }
    }
  }
  if (!id || !name || !type) return std::nullopt;
  input.id = *id;
  input.name = *name;
  input.type = *type;
  return input;
}

std::optional<OutputFile> read_output(Reader& reader, const Json& node,
                                      const std::string& location) {
  if (!node.is_object()) {
    reader.issue("STRUCT-TYPE", location, "expected an object", true);
    return std::nullopt;
  }
  OutputFile output;
  auto id = reader.string_field(node, location, "id", true, true);
  auto name = reader.string_field(node, location, "name", true, true);
  auto path = reader.string_field(node, location, "path-template", true, true);
  output.description = reader.string_field(node, location, "description", false);
  output.stripped_extensions =
      reader.string_list(node, location, "path-template-stripped-extensions", false);
  output.value_key = reader.string_field(node, location, "value-key", false, true);
  output.command_line_flag = reader.string_field(node, location, "command-line-flag", false, true);
  output.command_line_separator =
      reader.string_field(node, location, "command-line-separator", false);
  output.optional = reader.bool_field(node, location, "optional");
  output.list = reader.bool_field(node, location, "list");
  output.file_template = reader.string_list(node, location, "file-template", false);
  output.extra = reader.unknown_keys(
      node, location,
      {"id", "name", "description", "path-template", "path-template-stripped-extensions",
       "value-key", "command-line-flag", "command-line-separator", "optional", "list",
       "file-template"});
  if (!id || !name || !path) return std::nullopt;
  output.id = *id;
  output.name = *name;
  output.path_template = *path;
  return output;
}

std::optional<Group> read_group(Reader& reader, const Json& node, const std::string& location) {
  if (!node.is_object()) {
    reader.issue("STRUCT-TYPE", location, "expected an object", true);
    return std::nullopt;
  }
  Group group;
  auto id = reader.string_field(node, location, "id", true, true);
  auto name = reader.string_field(node, location, "name", true, true);
  auto members = reader.string_list(node, location, "members", true);
  if (members && members->empty()) {
    reader.issue("STRUCT-EMPTY", path_key(location, "members"), "group has no members", false);
  }
  group.mutually_exclusive = reader.bool_field(node, location, "mutually-exclusive");
  group.one_is_required = reader.bool_field(node, location, "one-is-required");
  group.all_or_none = reader.bool_field(node, location, "all-or-none");
  group.extra = reader.unknown_keys(
      node, location,
      {"id", "name", "members", "mutually-exclusive", "one-is-required", "all-or-none"});
  if (!id || !name || !members) return std::nullopt;
  group.id = *id;
  group.name = *name;
  group.members = *members;
  return group;
}

std::optional<ContainerSpec> read_container(Reader& reader, const Json& node,
                                            const std::string& location) {
  ContainerSpec spec;
  std::optional<ContainerType> type;
  if (const Json* t = reader.field(node, location, "type", Kind::kString, true)) {
    type = container_type_from_string(t->get<std::string>());
    if (!type) {
      reader.issue("STRUCT-ENUM", path_key(location, "type"),
                   "container type \"" + t->get<std::string>() +
                       "\" is not one of docker, singularity, rootfs",
                   true);
    }
  }
  spec.image = reader.string_field(node, location, "image", false, true);
  spec.url = reader.string_field(node, location, "url", false, true);
  spec.working_directory = reader.string_field(node, location, "working-directory", false, true);
  spec.entrypoint = reader.bool_field(node, location, "entrypoint");
  spec.image_hash = reader.string_field(node, location, "image-hash", false, true);
  spec.extra = reader.unknown_keys(
      node, location, {"type", "image", "url", "working-directory", "entrypoint", "image-hash"});
  if (!type) return std::nullopt;
  spec.type = *type;
  if (spec.image && spec.url) {
    reader.issue("STRUCT-CONTAINER", location, "exactly one of image and url may be given", false);
  } else if (*type == ContainerType::kRootfs && !spec.url) {
    reader.issue("STRUCT-CONTAINER", location, "rootfs containers are identified by url", false);
  } else if (*type != ContainerType::kRootfs && !spec.image) {
    reader.issue("STRUCT-CONTAINER", location,
                 std::string(to_string(*type)) + " containers are identified by image", false);
  }
  return spec;
}

std::optional<SuggestedResources> read_resources(Reader& reader, const Json& node,
                                                 const std::string& location) {
  SuggestedResources resources;
  auto positive = [&](const char* key, bool integer) -> std::optional<Json> {
    auto value = reader.number_field(node, location, key);
    if (!value) return value;
    const bool integral = value->is_number_integer();
    if (value->get<double>() <= 0.0 || (integer && !integral)) {
      reader.issue("STRUCT-RESOURCE", path_key(location, key),
                   integer ? "must be a positive integer" : "must be a positive number", false);
    }
    return value;
  };
  resources.cpu_cores = positive("cpu-cores", true);
  resources.nodes = positive("nodes", true);
  resources.ram = positive("ram", false);
  resources.disk_space = positive("disk-space", false);
  resources.walltime_estimate = positive("walltime-estimate", false);
  resources.extra = reader.unknown_keys(
      node, location, {"cpu-cores", "nodes", "ram", "disk-space", "walltime-estimate"});
  return resources;
}

}  // namespace

DescriptorReadResult read_descriptor_json(const Json& document) {
  Reader reader;
  DescriptorReadResult result;
  const std::string root = "$";
  if (!document.is_object()) {
    reader.issue("STRUCT-TYPE", root, "descriptor must be a JSON object", true);
    result.issues = reader.take();
    return result;
  }

  Descriptor d;
  auto name = reader.string_field(document, root, "name", true, true);
  auto tool_version = reader.string_field(document, root, "tool-version", true, true);
  auto description = reader.string_field(document, root, "description", true, true);
  auto command_line = reader.string_field(document, root, "command-line", true, true);
  auto schema_version = reader.string_field(document, root, "schema-version", true, true);
  if (schema_version && !schema_version->empty() && *schema_version != kSchemaVersion) {
    reader.issue("STRUCT-SCHEMA-VERSION", path_key(root, "schema-version"),
                 "unsupported schema version \"" + *schema_version + "\" (expected \"" +
                     std::string(kSchemaVersion) + "\")",
                 false);
  }

  if (const Json* inputs = reader.field(document, root, "inputs", Kind::kArray, false)) {
    for (std::size_t i = 0; i < inputs->size(); ++i) {
      if (auto input = read_input(reader, (*inputs)[i], path_index(path_key(root, "inputs"), i))) {
        d.inputs.push_back(std::move(*input));
      }
    }
  }
  if (const Json* outputs = reader.field(document, root, "output-files", Kind::kArray, false)) {
    for (std::size_t i = 0; i < outputs->size(); ++i) {
      if (auto output =
              read_output(reader, (*outputs)[i], path_index(path_key(root, "output-files"), i))) {
        d.output_files.push_back(std::move(*output));
      }
    }
  }
  if (const Json* groups = reader.field(document, root, "groups", Kind::kArray, false)) {
    d.groups.emplace();
    for (std::size_t i = 0; i < groups->size(); ++i) {
      if (auto group = read_group(reader, (*groups)[i], path_index(path_key(root, "groups"), i))) {
        d.groups->push_back(std::move(*group));
      }
    }
  }
  if (const Json* container = reader.field(document, root, "container", Kind::kObject, false)) {
    d.container = read_container(reader, *container, path_key(root, "container"));
  }
  if (const Json* resources =
          reader.field(document, root, "suggested-resources", Kind::kObject, false)) {
    d.suggested_resources = read_resources(reader, *resources, path_key(root, "suggested-resources"));
  }
  if (const Json* custom = reader.field(document, root, "custom", Kind::kObject, false)) {
    d.custom = *custom;
  }
  if (const Json* schema = reader.field(document, root, "invocation-schema", Kind::kObject, false)) {
    d.invocation_schema = *schema;
  }
  d.extra = reader.unknown_keys(
      document, root,
      {"name", "tool-version", "description", "schema-version", "command-line", "inputs",
       "output-files", "groups", "container", "suggested-resources", "custom",
       "invocation-schema"});

  // Requires/disables must name declared inputs; only checkable once all
  // inputs are known.
  std::set<std::string> input_ids;
  for (const auto& input : d.inputs) input_ids.insert(input.id);
  for (std::size_t i = 0; i < d.inputs.size(); ++i) {
    const auto& input = d.inputs[i];
    const std::string where = path_index(path_key(root, "inputs"), i);
    for (const char* key : {"requires-inputs", "disables-inputs"}) {
      const auto& ids = std::string_view(key) == "requires-inputs" ? input.required_ids()
                                                                   : input.disabled_ids();
      for (std::size_t j = 0; j < ids.size(); ++j) {
        if (input_ids.count(ids[j]) == 0) {
          reader.issue("STRUCT-REF", path_index(path_key(where, key), j),
                       "\"" + ids[j] + "\" does not name an input", false);
        }
      }
    }
  }

  if (!reader.blocked() && name && tool_version && description && command_line &&
      schema_version) {
    d.name = *name;
    d.tool_version = *tool_version;
    d.description = *description;
    d.command_line = *command_line;
    d.schema_version = *schema_version;
    result.descriptor = std::move(d);
  }
  result.issues = reader.take();
  return result;
}

DescriptorReadResult read_descriptor(std::string_view text) {
  try {
    return read_descriptor_json(parse_json_text(text));
  } catch (const JsonSyntaxError& e) {
    return DescriptorReadResult{std::nullopt, e.issues()};
  }
}

Descriptor parse_descriptor_json(const Json& document) {
  DescriptorReadResult result = read_descriptor_json(document);
  if (!result.descriptor) {
    std::vector<StructuralIssue> blocking;
    for (auto& issue : result.issues) {
      if (issue.blocking) blocking.push_back(std::move(issue));
    }
    throw DescriptorError(std::move(blocking));
  }
  return std::move(*result.descriptor);
}

Descriptor parse_descriptor(std::string_view text) {
  return parse_descriptor_json(parse_json_text(text));
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

template <typename T>
void put(Json& out, const char* key, const std::optional<T>& value) {
  if (value) out[key] = *value;
}

void put_extra(Json& out, const Json& extra) {
  for (auto it = extra.begin(); it != extra.end(); ++it) out[it.key()] = it.value();
}

Json serialize_input(const Input& input) {
  Json out = Json::object();
  out["id"] = input.id;
  out["name"] = input.name;
  out["type"] = std::string(to_string(input.type));
  put(out, "optional", input.optional);
  put(out, "description", input.description);
  put(out, "value-key", input.value_key);
  put(out, "command-line-flag", input.command_line_flag);
  put(out, "command-line-separator", input.command_line_separator);
  put(out, "default-value", input.default_value);
  put(out, "list", input.list);
  if (input.value_choices) out["value-choices"] = Json(*input.value_choices);
  put(out, "minimum", input.minimum);
  put(out, "maximum", input.maximum);
  put(out, "exclusive-minimum", input.exclusive_minimum);
  put(out, "exclusive-maximum", input.exclusive_maximum);
  put(out, "requires-inputs", input.requires_inputs);
  put(out, "disables-inputs", input.disables_inputs);
  put_extra(out, input.extra);
  return out;
}

Json serialize_output(const OutputFile& output) {
  Json out = Json::object();
  out["id"] = output.id;
  out["name"] = output.name;
  put(out, "description", output.description);
  out["path-template"] = output.path_template;
  put(out, "path-template-stripped-extensions", output.stripped_extensions);
  put(out, "value-key", output.value_key);
  put(out, "command-line-flag", output.command_line_flag);
  put(out, "command-line-separator", output.command_line_separator);
  put(out, "optional", output.optional);
  put(out, "list", output.list);
  put(out, "file-template", output.file_template);
  put_extra(out, output.extra);
  return out;
}

Json serialize_group(const Group& group) {
  Json out = Json::object();
  out["id"] = group.id;
  out["name"] = group.name;
  out["members"] = group.members;
  put(out, "mutually-exclusive", group.mutually_exclusive);
  put(out, "one-is-required", group.one_is_required);
  put(out, "all-or-none", group.all_or_none);
  put_extra(out, group.extra);
  return out;
}

Json serialize_container(const ContainerSpec& spec) {
  Json out = Json::object();
  out["type"] = std::string(to_string(spec.type));
  put(out, "image", spec.image);
  put(out, "url", spec.url);
  put(out, "working-directory", spec.working_directory);
  put(out, "entrypoint", spec.entrypoint);
  put(out, "image-hash", spec.image_hash);
  put_extra(out, spec.extra);
  return out;
}

Json serialize_resources(const SuggestedResources& resources) {
  Json out = Json::object();
  put(out, "cpu-cores", resources.cpu_cores);
  put(out, "nodes", resources.nodes);
  put(out, "ram", resources.ram);
  put(out, "disk-space", resources.disk_space);
  put(out, "walltime-estimate", resources.walltime_estimate);
  put_extra(out, resources.extra);
  return out;
}

}  // namespace

Json serialize_descriptor(const Descriptor& d) {
  Json out = Json::object();
  out["name"] = d.name;
  out["tool-version"] = d.tool_version;
  out["description"] = d.description;
  out["schema-version"] = d.schema_version;
  out["command-line"] = d.command_line;
  out["inputs"] = Json::array();
  for (const auto& input : d.inputs) out["inputs"].push_back(serialize_input(input));
  out["output-files"] = Json::array();
  for (const auto& output : d.output_files) out["output-files"].push_back(serialize_output(output));
  if (d.groups) {
    out["groups"] = Json::array();
    for (const auto& group : *d.groups) out["groups"].push_back(serialize_group(group));
  }
  if (d.container) out["container"] = serialize_container(*d.container);
  if (d.suggested_resources) out["suggested-resources"] = serialize_resources(*d.suggested_resources);
  put(out, "custom", d.custom);
  put(out, "invocation-schema", d.invocation_schema);
  put_extra(out, d.extra);
  return out;
}

std::string read_text_file(const std::string& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw std::runtime_error("cannot read " + path + ": not a regular file");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("cannot read " + path);
  return buffer.str();
}

}  // namespace bosh
