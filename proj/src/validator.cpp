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

#include "bosh/validator.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace bosh {

namespace {

std::vector<Violation> issues_to_violations(const std::vector<StructuralIssue>& issues) {
  std::vector<Violation> out;
  out.reserve(issues.size());
  for (const auto& issue : issues) {
    out.push_back({issue.code, Severity::kError, issue.message, issue.location});
  }
  return out;
}

std::string input_location(std::size_t i) { return path_index("$.inputs", i); }
std::string output_location(std::size_t j) { return path_index("$.output-files", j); }
std::string group_location(std::size_t g) { return path_index("$.groups", g); }

std::string dq(const std::string& s) { return "\"" + s + "\""; }

// An element that declares a value-key, in source order (inputs, then outputs).
struct KeyedElement {
  std::string key;
  std::string id;
  std::string location;
  bool is_input;
};

class SemanticChecker {
 public:
  explicit SemanticChecker(const Descriptor& d) : d_(d) {
    for (std::size_t i = 0; i < d.inputs.size(); ++i) {
      input_index_[d.inputs[i].id] = i;
      if (d.inputs[i].value_key) {
        keyed_.push_back({*d.inputs[i].value_key, d.inputs[i].id, input_location(i), true});
      }
    }
    for (std::size_t j = 0; j < d.output_files.size(); ++j) {
      if (d.output_files[j].value_key) {
        keyed_.push_back(
            {*d.output_files[j].value_key, d.output_files[j].id, output_location(j), false});
      }
    }
  }

  std::vector<Violation> run() {
    value_keys_unique();
    ids_unique();
    value_keys_reachable();
    value_keys_not_nested();
    path_templates_unique();
    flag_shape();
    defaults_restricted();
    requires_disables_conflict();
    required_without_dependencies();
    group_members();
    mutex_no_requires();
    one_is_required_no_required();
    all_or_none_no_required();
    list_outputs_wildcard();
    return std::move(out_);
  }

 private:
  void add(const char* rule, std::string location, std::string message,
           Severity severity = Severity::kError) {
    out_.push_back({rule, severity, std::move(message), std::move(location)});
  }

  bool share_mutex_group(const std::string& a, const std::string& b) const {
    for (const auto& group : d_.group_list()) {
      if (!group.is_mutually_exclusive()) continue;
      const auto& m = group.members;
      if (std::find(m.begin(), m.end(), a) != m.end() &&
          std::find(m.begin(), m.end(), b) != m.end()) {
        return true;
      }
    }
    return false;
  }

  void value_keys_unique() {
    for (std::size_t k = 0; k < keyed_.size(); ++k) {
      for (std::size_t e = 0; e < k; ++e) {
        if (keyed_[e].key != keyed_[k].key) continue;
        if (keyed_[e].is_input && keyed_[k].is_input &&
            share_mutex_group(keyed_[e].id, keyed_[k].id)) {
          continue;
        }
        add("SEM-VK-UNIQUE", path_key(keyed_[k].location, "value-key"),
            "value-key " + dq(keyed_[k].key) + " is also used by " + dq(keyed_[e].id));
        break;
      }
    }
  }

  void ids_unique() {
    std::set<std::string> seen;
    auto check = [&](const std::string& id, const std::string& location) {
      if (!seen.insert(id).second) {
        add("SEM-ID-UNIQUE", path_key(location, "id"), "duplicate identifier " + dq(id));
      }
    };
    for (std::size_t i = 0; i < d_.inputs.size(); ++i) check(d_.inputs[i].id, input_location(i));
    for (std::size_t j = 0; j < d_.output_files.size(); ++j) {
      check(d_.output_files[j].id, output_location(j));
    }
  }

  bool in_file_template(const std::string& key) const {
    for (const auto& output : d_.output_files) {
      if (!output.file_template) continue;
      for (const auto& line : *output.file_template) {
        if (line.find(key) != std::string::npos) return true;
      }
    }
    return false;
  }

  void value_keys_reachable() {
    for (const auto& element : keyed_) {
      if (d_.command_line.find(element.key) != std::string::npos) continue;
      if (in_file_template(element.key)) {
        add("SEM-VK-REACHABLE", path_key(element.location, "value-key"),
            "value-key " + dq(element.key) +
                " appears only in a configuration file template, not in the command line",
            Severity::kWarning);
      } else {
        add("SEM-VK-REACHABLE", path_key(element.location, "value-key"),
            "value-key " + dq(element.key) +
                " appears neither in the command line nor in any file template");
      }
    }
  }

  void value_keys_not_nested() {
    // Distinct key strings, first occurrence wins for the location.
    std::vector<const KeyedElement*> distinct;
    for (const auto& element : keyed_) {
      const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                    [&](const KeyedElement* e) { return e->key == element.key; });
      if (!seen) distinct.push_back(&element);
    }
    for (const KeyedElement* outer : distinct) {
      for (const KeyedElement* inner : distinct) {
        if (inner == outer) continue;
        if (outer->key.find(inner->key) != std::string::npos) {
          add("SEM-VK-NONNESTED", path_key(outer->location, "value-key"),
              "value-key " + dq(inner->key) + " is contained in " + dq(outer->key));
        }
      }
    }
  }

  void path_templates_unique() {
    std::set<std::string> seen;
    for (std::size_t j = 0; j < d_.output_files.size(); ++j) {
      const auto& path = d_.output_files[j].path_template;
      if (!seen.insert(path).second) {
        add("SEM-PT-UNIQUE", path_key(output_location(j), "path-template"),
            "path-template " + dq(path) + " is used by another output");
      }
    }
  }

  void flag_shape() {
    for (std::size_t i = 0; i < d_.inputs.size(); ++i) {
      const auto& input = d_.inputs[i];
      if (input.type != InputType::kFlag) continue;
      std::vector<std::string> problems;
      if (!input.command_line_flag) problems.emplace_back("has no command-line-flag");
      if (!input.is_optional()) problems.emplace_back("is not optional");
      if (input.is_list()) problems.emplace_back("is a list");
      if (problems.empty()) continue;
      std::string message = "Flag input " + dq(input.id);
      for (std::size_t p = 0; p < problems.size(); ++p) {
        message += (p == 0 ? " " : ", ") + problems[p];
      }
      add("SEM-FLAG-SHAPE", input_location(i), message);
    }
  }

  static bool within_range(const Input& input, const Json& value) {
    if (!value.is_number()) return true;
    const double x = value.get<double>();
    if (input.minimum) {
      const double lo = input.minimum->get<double>();
      if (input.is_exclusive_minimum() ? !(x > lo) : !(x >= lo)) return false;
    }
    if (input.maximum) {
      const double hi = input.maximum->get<double>();
      if (input.is_exclusive_maximum() ? !(x < hi) : !(x <= hi)) return false;
    }
    return true;
  }

  void defaults_restricted() {
    for (std::size_t i = 0; i < d_.inputs.size(); ++i) {
      const auto& input = d_.inputs[i];
      if (!input.default_value) continue;
      std::vector<Json> values;
      if (input.is_list() && input.default_value->is_array()) {
        values.assign(input.default_value->begin(), input.default_value->end());
      } else {
        values.push_back(*input.default_value);
      }
      bool ok = true;
      for (const auto& value : values) {
        if (input.value_choices &&
            std::find(input.value_choices->begin(), input.value_choices->end(), value) ==
                input.value_choices->end()) {
          ok = false;
        }
        if (!within_range(input, value)) ok = false;
      }
      if (!ok) {
        add("SEM-DEFAULT-RESTRICT", path_key(input_location(i), "default-value"),
            "default value " + input.default_value->dump() + " of " + dq(input.id) +
                " is outside its value-choices or range");
      }
    }
  }

  void requires_disables_conflict() {
    for (std::size_t i = 0; i < d_.inputs.size(); ++i) {
      const auto& input = d_.inputs[i];
      for (const auto& id : input.required_ids()) {
        const auto& dis = input.disabled_ids();
        if (std::find(dis.begin(), dis.end(), id) != dis.end()) {
          add("SEM-REQ-DIS-CONFLICT", input_location(i),
              dq(input.id) + " both requires and disables " + dq(id));
          break;
        }
      }
    }
  }

  void required_without_dependencies() {
    for (std::size_t i = 0; i < d_.inputs.size(); ++i) {
      const auto& input = d_.inputs[i];
      if (input.is_optional()) continue;
      if (!input.required_ids().empty() || !input.disabled_ids().empty()) {
        add("SEM-REQUIRED-NODEP", input_location(i),
            "required input " + dq(input.id) + " cannot require or disable other inputs");
      }
    }
  }

  void group_members() {
    std::set<std::string> grouped;
    const auto& groups = d_.group_list();
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const auto& members = groups[g].members;
      for (std::size_t k = 0; k < members.size(); ++k) {
        const std::string where = path_index(path_key(group_location(g), "members"), k);
        if (input_index_.count(members[k]) == 0) {
          add("SEM-GROUP-MEMBERS", where, dq(members[k]) + " does not name an input");
        } else if (!grouped.insert(members[k]).second) {
          add("SEM-GROUP-MEMBERS", where, dq(members[k]) + " already belongs to a group");
        }
      }
    }
  }

  const Input* input(const std::string& id) const {
    const auto it = input_index_.find(id);
    return it == input_index_.end() ? nullptr : &d_.inputs[it->second];
  }

  void mutex_no_requires() {
    const auto& groups = d_.group_list();
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (!groups[g].is_mutually_exclusive()) continue;
      const auto& members = groups[g].members;
      for (std::size_t k = 0; k < members.size(); ++k) {
        const Input* member = input(members[k]);
        if (member == nullptr) continue;
        for (const auto& req : member->required_ids()) {
          if (req != member->id && std::find(members.begin(), members.end(), req) != members.end()) {
            add("SEM-MUTEX-NOREQ", path_index(path_key(group_location(g), "members"), k),
                dq(member->id) + " requires " + dq(req) +
                    " from the same mutually-exclusive group");
            break;
          }
        }
      }
    }
  }

  void non_optional_members(bool (Group::*flag)() const, const char* rule, Severity severity,
                            const char* kind) {
    const auto& groups = d_.group_list();
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (!(groups[g].*flag)()) continue;
      const auto& members = groups[g].members;
      for (std::size_t k = 0; k < members.size(); ++k) {
        const Input* member = input(members[k]);
        if (member == nullptr || member->is_optional()) continue;
        add(rule, path_index(path_key(group_location(g), "members"), k),
            std::string(kind) + " group " + dq(groups[g].id) + " has required member " +
                dq(member->id),
            severity);
      }
    }
  }

  void one_is_required_no_required() {
    non_optional_members(&Group::is_one_is_required, "SEM-ONEREQ-NOREQ", Severity::kWarning,
                         "one-is-required");
  }

  void all_or_none_no_required() {
    non_optional_members(&Group::is_all_or_none, "SEM-AON-NOREQ", Severity::kError,
                         "all-or-none");
  }

  void list_outputs_wildcard() {
    for (std::size_t j = 0; j < d_.output_files.size(); ++j) {
      const auto& output = d_.output_files[j];
      if (output.is_list() && output.path_template.find('*') == std::string::npos) {
        add("SEM-LIST-WILDCARD", path_key(output_location(j), "path-template"),
            "list output " + dq(output.id) + " needs a '*' wildcard in its path-template");
      }
    }
  }

  const Descriptor& d_;
  std::map<std::string, std::size_t> input_index_;
  std::vector<KeyedElement> keyed_;
  std::vector<Violation> out_;
};

}  // namespace

std::vector<Violation> validate_structure(std::string_view text) {
  return issues_to_violations(read_descriptor(text).issues);
}

std::vector<Violation> validate_semantics(const Descriptor& descriptor) {
  return SemanticChecker(descriptor).run();
}

ValidationReport validate(std::string_view text) {
  ValidationReport report;
  DescriptorReadResult read = read_descriptor(text);
  report.violations = issues_to_violations(read.issues);
  if (report.violations.empty() && read.descriptor) {
    report.violations = validate_semantics(*read.descriptor);
    report.semantic_phase_ran = true;
  }
  return report;
}

ValidationReport validate_descriptor(const Descriptor& descriptor) {
  ValidationReport report;
  report.violations =
      issues_to_violations(read_descriptor_json(serialize_descriptor(descriptor)).issues);
  if (report.violations.empty()) {
    report.violations = validate_semantics(descriptor);
    report.semantic_phase_ran = true;
  }
  return report;
}

std::string format_report(const ValidationReport& report) {
  std::string text;
  for (const auto& v : report.violations) {
    text += format_violation(v);
    text += '\n';
  }
  return text;
}

Json report_to_json(const ValidationReport& report) {
  Json out = Json::object();
  out["valid"] = report.passed();
  out["violations"] = Json::array();
  for (const auto& v : report.violations) out["violations"].push_back(violation_to_json(v));
  return out;
}

}  // namespace bosh
