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

#include "bosh/command_builder.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <utility>

namespace bosh {

namespace {

void replace_all(std::string& text, std::string_view key, std::string_view value) {
  if (key.empty()) return;
  std::string out;
  std::size_t start = 0;
  bool replaced = false;
  for (std::size_t pos = text.find(key); pos != std::string::npos; pos = text.find(key, start)) {
    out.append(text, start, pos - start);
    out.append(value);
    start = pos + key.size();
    replaced = true;
  }
  if (!replaced) return;
  out.append(text, start, std::string::npos);
  text = std::move(out);
}

bool strips_extensions(InputType type) {
  return type == InputType::kFile || type == InputType::kString;
}

constexpr std::string_view kShellSpecial = " \t\n;&|<>$`\\\"'(){}*?!#~";

// Substitution state shared by the three phases.
struct Working {
  std::string command;
  std::vector<std::string> paths;
  std::vector<std::optional<std::vector<std::string>>> templates;
  std::vector<std::string> warnings;
};

void replace_everywhere(Working& w, std::string_view key, std::string_view value) {
  for (auto& path : w.paths) replace_all(path, key, value);
  for (auto& lines : w.templates) {
    if (!lines) continue;
    for (auto& line : *lines) replace_all(line, key, value);
  }
  replace_all(w.command, key, value);
}

void warn_about_value(const Input& input, const Json& value, const std::vector<std::string>& keys,
                      std::vector<std::string>& warnings) {
  std::vector<std::string> texts;
  if (value.is_array()) {
    for (const auto& item : value) texts.push_back(render_value(item));
  } else if (value.is_string()) {
    texts.push_back(value.get<std::string>());
  }
  for (const auto& text : texts) {
    if (text.find_first_of(kShellSpecial) != std::string::npos) {
      warnings.push_back("value of \"" + input.id +
                         "\" contains whitespace or shell metacharacters and is spliced verbatim");
    }
    for (const auto& key : keys) {
      if (text.find(key) != std::string::npos) {
        warnings.push_back("value of \"" + input.id + "\" contains the value-key \"" + key + "\"");
      }
    }
  }
}

// Phase 1: input value-keys into path templates, file templates and the
// command line, in input order; then absent inputs' keys are deleted.
Working substitute_inputs(const Descriptor& d, const Invocation& invocation) {
  Working w;
  w.command = d.command_line;
  for (const auto& output : d.output_files) {
    w.paths.push_back(output.path_template);
    w.templates.push_back(output.file_template);
  }
  const std::vector<std::string> keys = declared_value_keys(d);

  for (const auto& input : d.inputs) {
    if (!input.value_key || !has_value(input, invocation)) continue;
    const std::string& key = *input.value_key;
    const Json& value = invocation.at(input.id);
    warn_about_value(input, value, keys, w.warnings);

    for (std::size_t j = 0; j < d.output_files.size(); ++j) {
      std::string stripped;
      if (input.type == InputType::kFlag) {
        stripped = render_input_token(input, value);
      } else if (!strips_extensions(input.type)) {
        stripped = render_value(value);
      } else if (value.is_array()) {
        for (std::size_t k = 0; k < value.size(); ++k) {
          if (k > 0) stripped += ' ';
          stripped += strip_extensions(render_value(value[k]), d.output_files[j].extensions());
        }
      } else {
        stripped = strip_extensions(render_value(value), d.output_files[j].extensions());
      }
      replace_all(w.paths[j], key, stripped);
      if (w.templates[j]) {
        for (auto& line : *w.templates[j]) replace_all(line, key, stripped);
      }
    }
    replace_all(w.command, key, render_input_token(input, value));
  }

  for (const auto& input : d.inputs) {
    if (input.value_key && !has_value(input, invocation)) {
      replace_everywhere(w, *input.value_key, "");
    }
  }
  return w;
}

std::vector<std::string> residual_in(const std::vector<std::string>& keys,
                                     const std::vector<const std::string*>& texts) {
  std::vector<std::string> residual;
  for (const auto& key : keys) {
    for (const std::string* text : texts) {
      if (text->find(key) != std::string::npos) {
        residual.push_back(key);
        break;
      }
    }
  }
  return residual;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ", ";
    out += item;
  }
  return out;
}

bool unsafe_path(const std::string& path) {
  const std::filesystem::path p(path);
  if (p.is_absolute()) return true;
  return std::any_of(p.begin(), p.end(), [](const auto& part) { return part == ".."; });
}

}  // namespace

PlanError::PlanError(Kind kind, std::string message, std::vector<std::string> residual_keys)
    : std::runtime_error(std::move(message)), kind_(kind), residual_keys_(std::move(residual_keys)) {}

std::string strip_extensions(std::string_view value, std::span<const std::string> extensions) {
  std::string out(value);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& extension : extensions) {
      if (extension.empty() || out.size() < extension.size()) continue;
      if (out.compare(out.size() - extension.size(), extension.size(), extension) == 0) {
        out.erase(out.size() - extension.size());
        changed = true;
      }
    }
  }
  return out;
}

std::string render_value(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number()) return render_number(value);
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (i > 0) out += ' ';
      out += render_value(value[i]);
    }
    return out;
  }
  if (value.is_null()) return "";
  return value.dump();
}

std::string render_input_token(const Input& input, const Json& value) {
  if (input.type == InputType::kFlag) {
    const bool set = value.is_boolean() && value.get<bool>();
    return set ? input.command_line_flag.value_or("") : "";
  }
  std::string rendered = render_value(value);
  if (!input.command_line_flag) return rendered;
  return *input.command_line_flag + input.separator() + rendered;
}

Invocation with_defaults(const Descriptor& d, const Invocation& invocation) {
  Invocation out = invocation.is_object() ? invocation : Json::object();
  for (const auto& input : d.inputs) {
    if (!input.default_value) continue;
    const auto it = out.find(input.id);
    if (it == out.end() || it->is_null()) out[input.id] = *input.default_value;
  }
  return out;
}

std::vector<std::string> declared_value_keys(const Descriptor& d) {
  std::vector<std::string> keys;
  auto add = [&](const std::optional<std::string>& key) {
    if (key && std::find(keys.begin(), keys.end(), *key) == keys.end()) keys.push_back(*key);
  };
  for (const auto& input : d.inputs) add(input.value_key);
  for (const auto& output : d.output_files) add(output.value_key);
  return keys;
}

CommandLinePlan build_plan(const Descriptor& d, const Invocation& invocation) {
  Working w = substitute_inputs(d, with_defaults(d, invocation));

  // Phase 2: output value-keys into file templates and the command line.
  for (std::size_t j = 0; j < d.output_files.size(); ++j) {
    const auto& output = d.output_files[j];
    if (!output.value_key) continue;
    for (auto& lines : w.templates) {
      if (!lines) continue;
      for (auto& line : *lines) replace_all(line, *output.value_key, w.paths[j]);
    }
    const std::string token = output.command_line_flag
                                  ? *output.command_line_flag + output.separator() + w.paths[j]
                                  : w.paths[j];
    replace_all(w.command, *output.value_key, token);
  }

  std::vector<const std::string*> texts{&w.command};
  for (const auto& path : w.paths) texts.push_back(&path);
  std::vector<std::string> residual = residual_in(declared_value_keys(d), texts);
  if (!residual.empty()) {
    throw PlanError(PlanError::Kind::kResidualKeys,
                    "unsubstituted value-keys remain: " + join(residual), residual);
  }

  CommandLinePlan plan;
  plan.command = std::move(w.command);
  plan.warnings = std::move(w.warnings);
  // Phase 3: configuration files, written later by the executor.
  for (std::size_t j = 0; j < d.output_files.size(); ++j) {
    const auto& output = d.output_files[j];
    plan.resolved_outputs.push_back({output.id, w.paths[j], output.is_list()});
    if (!w.templates[j]) continue;
    if (unsafe_path(w.paths[j])) {
      throw PlanError(PlanError::Kind::kUnsafePath,
                      "configuration file \"" + output.id + "\" path \"" + w.paths[j] +
                          "\" escapes the working directory");
    }
    std::string content;
    for (const auto& line : *w.templates[j]) {
      content += line;
      content += '\n';
    }
    plan.config_files.push_back({output.id, w.paths[j], std::move(content)});
  }
  return plan;
}

std::vector<ResolvedOutput> resolve_output_paths(const Descriptor& d,
                                                 const Invocation& invocation) {
  Working w = substitute_inputs(d, with_defaults(d, invocation));
  std::vector<const std::string*> texts;
  for (const auto& path : w.paths) texts.push_back(&path);
  std::vector<std::string> residual = residual_in(declared_value_keys(d), texts);
  if (!residual.empty()) {
    throw PlanError(PlanError::Kind::kResidualKeys,
                    "unsubstituted value-keys remain in path templates: " + join(residual),
                    residual);
  }
  std::vector<ResolvedOutput> out;
  for (std::size_t j = 0; j < d.output_files.size(); ++j) {
    out.push_back({d.output_files[j].id, w.paths[j], d.output_files[j].is_list()});
  }
  return out;
}

}  // namespace bosh
