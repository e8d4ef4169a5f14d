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

#include "bosh/invocation_schema.hpp"

#include <algorithm>
#include <atomic>
#include <utility>

#include "bosh/schema_eval.hpp"
#include "bosh/validator.hpp"

namespace bosh {

namespace {

std::atomic<std::uint64_t> generation_counter{0};

Json element_schema(const Input& input) {
  Json schema = Json::object();
  switch (input.type) {
    case InputType::kString:
    case InputType::kFile: schema["type"] = "string"; break;
    case InputType::kNumber: schema["type"] = "number"; break;
    case InputType::kFlag: schema["type"] = "boolean"; break;
  }
  if (input.value_choices) schema["enum"] = Json(*input.value_choices);
  if (input.type == InputType::kNumber) {
    if (input.minimum) {
      schema["minimum"] = *input.minimum;
      if (input.is_exclusive_minimum()) schema["exclusiveMinimum"] = true;
    }
    if (input.maximum) {
      schema["maximum"] = *input.maximum;
      if (input.is_exclusive_maximum()) schema["exclusiveMaximum"] = true;
    }
  }
  return schema;
}

Json property_schema(const Input& input) {
  if (!input.is_list() || input.type == InputType::kFlag) return element_schema(input);
  Json schema = Json::object();
  schema["type"] = "array";
  schema["items"] = element_schema(input);
  return schema;
}

// Subschema satisfied exactly when `input` has a value.
Json present(const Input& input) {
  Json schema = Json::object();
  schema["required"] = Json::array({input.id});
  if (input.type == InputType::kFlag) {
    schema["properties"] = Json::object();
    schema["properties"][input.id] = Json{{"enum", Json::array({true})}};
  }
  return schema;
}

Json absent(const Input& input) { return Json{{"not", present(input)}}; }

Json all_of(std::vector<Json> parts) {
  if (parts.size() == 1) return std::move(parts.front());
  Json schema = Json::object();
  schema["allOf"] = Json(std::move(parts));
  return schema;
}

}  // namespace

bool has_value(const Input& input, const Invocation& invocation) {
  if (!invocation.is_object()) return false;
  const auto it = invocation.find(input.id);
  if (it == invocation.end() || it->is_null()) return false;
  if (input.type == InputType::kFlag) return it->is_boolean() && it->get<bool>();
  return true;
}

InvocationSchemaError::InvocationSchemaError(std::string message,
                                             std::vector<Violation> violations)
    : std::runtime_error(std::move(message)), violations_(std::move(violations)) {}

InvalidInvocationError::InvalidInvocationError(std::vector<Violation> violations)
    : std::runtime_error(violations.empty()
                             ? std::string("invalid invocation")
                             : "invalid invocation: " + format_violation(violations.front()) +
                                   (violations.size() > 1
                                        ? " (+" + std::to_string(violations.size() - 1) + " more)"
                                        : std::string())),
      violations_(std::move(violations)) {}

Json generate_invocation_schema(const Descriptor& d) {
  ++generation_counter;
  ValidationReport report = validate_descriptor(d);
  if (!report.passed()) {
    std::vector<Violation> errors;
    for (auto& v : report.violations) {
      if (v.severity == Severity::kError) errors.push_back(std::move(v));
    }
    throw InvocationSchemaError("descriptor \"" + d.name + "\" has validation errors",
                                std::move(errors));
  }

  Json schema = Json::object();
  schema["$schema"] = "http://json-schema.org/draft-04/schema#";
  schema["title"] = d.name + " invocation";
  schema["type"] = "object";
  schema["properties"] = Json::object();
  Json required = Json::array();
  for (const auto& input : d.inputs) {
    schema["properties"][input.id] = property_schema(input);
    if (!input.is_optional()) required.push_back(input.id);
  }
  if (!required.empty()) schema["required"] = std::move(required);
  schema["additionalProperties"] = false;

  // Consequences of each input having a value, in input order.
  Json dependencies = Json::object();
  for (const auto& input : d.inputs) {
    std::vector<Json> consequences;
    for (const auto& group : d.group_list()) {
      if (!group.is_mutually_exclusive()) continue;
      const auto& m = group.members;
      if (std::find(m.begin(), m.end(), input.id) == m.end()) continue;
      for (const auto& other_id : m) {
        if (other_id == input.id) continue;
        if (const Input* other = d.find_input(other_id)) consequences.push_back(absent(*other));
      }
    }
    for (const auto& id : input.required_ids()) {
      if (const Input* other = d.find_input(id)) consequences.push_back(present(*other));
    }
    for (const auto& id : input.disabled_ids()) {
      if (const Input* other = d.find_input(id)) consequences.push_back(absent(*other));
    }
    if (consequences.empty()) continue;
    Json rule = all_of(std::move(consequences));
    if (input.type == InputType::kFlag) {
      // "dependencies" fires on key presence; a false flag has no value.
      Json unset = Json::object();
      unset["properties"] = Json::object();
      unset["properties"][input.id] = Json{{"enum", Json::array({false})}};
      rule = Json{{"anyOf", Json::array({std::move(unset), std::move(rule)})}};
    }
    dependencies[input.id] = std::move(rule);
  }
  if (!dependencies.empty()) schema["dependencies"] = std::move(dependencies);

  Json constraints = Json::array();
  for (const auto& group : d.group_list()) {
    std::vector<const Input*> members;
    for (const auto& id : group.members) {
      if (const Input* input = d.find_input(id)) members.push_back(input);
    }
    if (group.is_one_is_required()) {
      Json any = Json::array();
      for (const Input* m : members) any.push_back(present(*m));
      constraints.push_back(
          Json{{"description", "one-is-required group \"" + group.id + "\": at least one member "
                               "must have a value"},
               {"anyOf", std::move(any)}});
    }
    if (group.is_all_or_none()) {
      Json all = Json::array();
      Json none = Json::array();
      for (const Input* m : members) {
        all.push_back(present(*m));
        none.push_back(absent(*m));
      }
      constraints.push_back(
          Json{{"description", "all-or-none group \"" + group.id + "\": members must have "
                               "values together or not at all"},
               {"anyOf", Json::array({Json{{"allOf", std::move(all)}},
                                      Json{{"allOf", std::move(none)}}})}});
    }
  }
  if (!constraints.empty()) schema["allOf"] = std::move(constraints);
  return schema;
}

std::uint64_t schema_generation_count() { return generation_counter.load(); }

std::vector<Violation> validate_invocation(const Descriptor& d, const Invocation& invocation) {
  if (d.invocation_schema) return evaluate_schema(*d.invocation_schema, invocation);
  return evaluate_schema(generate_invocation_schema(d), invocation);
}

Descriptor attach_schema(Descriptor d) {
  d.invocation_schema.reset();
  d.invocation_schema = generate_invocation_schema(d);
  return d;
}

}  // namespace bosh
