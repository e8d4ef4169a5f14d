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

#include "bosh/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string_view>
#include <utility>

#include "bosh/schema_eval.hpp"

namespace bosh {

namespace {

constexpr std::string_view kAlphabet = "abcdefghijklmnopqrstuvwxyz0123456789";

// std:: distributions are implementation-defined; these are not, so a seed
// means the same invocation everywhere.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool coin(double p) { return unit() < p; }

  std::string token() {
    const std::size_t length = 4 + below(5);
    std::string out;
    for (std::size_t i = 0; i < length; ++i) out += kAlphabet[below(kAlphabet.size())];
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

bool in_range(const Input& input, double x) {
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

Json sample_number(const Input& input, Sampler& sampler) {
  double lo = sampling::kDefaultMinimum;
  double hi = sampling::kDefaultMinimum + sampling::kDefaultSpan;
  if (input.minimum && input.maximum) {
    lo = input.minimum->get<double>();
    hi = input.maximum->get<double>();
  } else if (input.minimum) {
    lo = input.minimum->get<double>();
    hi = lo + sampling::kDefaultSpan;
  } else if (input.maximum) {
    hi = input.maximum->get<double>();
    lo = hi - sampling::kDefaultSpan;
  }
  // Two decimals keep simulated command lines readable.
  for (int attempt = 0; attempt < 64; ++attempt) {
    const double raw = lo + sampler.unit() * (hi - lo);
    const double value = std::round(raw * 100.0) / 100.0;
    if (in_range(input, value)) return value;
    if (in_range(input, raw)) return raw;
  }
  return (lo + hi) / 2.0;
}

Json sample_element(const Input& input, Sampler& sampler) {
  if (input.value_choices && !input.value_choices->empty()) {
    return (*input.value_choices)[sampler.below(input.value_choices->size())];
  }
  switch (input.type) {
    case InputType::kString: return sampler.token();
    case InputType::kFile: return sampler.token() + ".txt";
    case InputType::kNumber: return sample_number(input, sampler);
    case InputType::kFlag: return true;
  }
  return nullptr;
}

Json sample_value(const Input& input, Sampler& sampler) {
  if (input.type == InputType::kFlag) return true;
  if (!input.is_list()) return sample_element(input, sampler);
  const std::size_t span = sampling::kMaxListLength - sampling::kMinListLength + 1;
  const std::size_t length = sampling::kMinListLength + sampler.below(span);
  Json items = Json::array();
  for (std::size_t i = 0; i < length; ++i) items.push_back(sample_element(input, sampler));
  return items;
}

// Presence-level check of groups and requires/disables, used to discard
// patterns before values are sampled.
bool presence_ok(const Descriptor& d, const std::map<std::string, bool>& present) {
  auto has = [&](const std::string& id) {
    const auto it = present.find(id);
    return it != present.end() && it->second;
  };
  for (const auto& group : d.group_list()) {
    int count = 0;
    for (const auto& id : group.members) count += has(id) ? 1 : 0;
    if (group.is_mutually_exclusive() && count > 1) return false;
    if (group.is_one_is_required() && count == 0) return false;
    if (group.is_all_or_none() && count != 0 &&
        count != static_cast<int>(group.members.size())) {
      return false;
    }
  }
  for (const auto& input : d.inputs) {
    if (!has(input.id)) continue;
    for (const auto& id : input.required_ids()) {
      if (!has(id)) return false;
    }
    for (const auto& id : input.disabled_ids()) {
      if (has(id)) return false;
    }
  }
  return true;
}

std::vector<std::string> constraint_names(const Descriptor& d) {
  std::vector<std::string> names;
  for (const auto& group : d.group_list()) names.push_back(group.id);
  for (const auto& input : d.inputs) {
    if (!input.required_ids().empty() || !input.disabled_ids().empty()) names.push_back(input.id);
  }
  return names;
}

}  // namespace

UnsatisfiableConstraintsError::UnsatisfiableConstraintsError(std::string message,
                                                             std::vector<std::string> constraints)
    : std::runtime_error(std::move(message)), constraints_(std::move(constraints)) {}

Invocation random_invocation(const Descriptor& d, std::uint64_t seed) {
  const Json schema = d.invocation_schema ? *d.invocation_schema : generate_invocation_schema(d);
  Sampler sampler(seed);
  for (int attempt = 0; attempt < sampling::kRetryBudget; ++attempt) {
    std::map<std::string, bool> present;
    for (const auto& input : d.inputs) {
      present[input.id] = !input.is_optional() || sampler.coin(sampling::kOptionalProbability);
    }
    if (!presence_ok(d, present)) continue;

    Invocation invocation = Json::object();
    for (const auto& input : d.inputs) {
      if (present[input.id]) {
        invocation[input.id] = sample_value(input, sampler);
      } else if (input.type == InputType::kFlag && sampler.coin(0.5)) {
        invocation[input.id] = false;
      }
    }
    if (schema_accepts(schema, invocation)) return invocation;
  }

  const std::vector<std::string> names = constraint_names(d);
  std::string message = "no valid invocation found for \"" + d.name + "\" within " +
                        std::to_string(sampling::kRetryBudget) + " attempts";
  if (!names.empty()) {
    message += "; constraints involved:";
    for (const auto& name : names) message += " " + name;
  }
  throw UnsatisfiableConstraintsError(message, names);
}

Simulation simulate_plan(const Descriptor& d, const std::optional<Invocation>& invocation,
                         std::optional<std::uint64_t> seed) {
  if (invocation.has_value() == seed.has_value()) {
    throw std::invalid_argument("simulate needs exactly one of an invocation or a seed");
  }
  Simulation result;
  if (invocation) {
    std::vector<Violation> violations = validate_invocation(d, *invocation);
    if (!violations.empty()) throw InvalidInvocationError(std::move(violations));
    result.invocation = *invocation;
  } else {
    result.invocation = random_invocation(d, *seed);
  }
  result.plan = build_plan(d, result.invocation);
  return result;
}

std::string simulate(const Descriptor& d, const std::optional<Invocation>& invocation,
                     std::optional<std::uint64_t> seed) {
  return simulate_plan(d, invocation, seed).plan.command;
}

}  // namespace bosh
