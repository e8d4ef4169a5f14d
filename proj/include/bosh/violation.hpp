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

#ifndef BOSH_VIOLATION_HPP_
#define BOSH_VIOLATION_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "bosh/json_util.hpp"

namespace bosh {

enum class Severity { kError, kWarning };

std::string_view to_string(Severity severity);

// One finding from descriptor or invocation checking. `location` is a
// JSONPath-like locator into the checked document, e.g. "$.inputs[0].type".
struct Violation {
  std::string rule_id;
  Severity severity = Severity::kError;
  std::string message;
  std::string location;

  bool operator==(const Violation&) const = default;
};

bool has_errors(const std::vector<Violation>& violations);

// "severity rule-id location message"
std::string format_violation(const Violation& v);

Json violation_to_json(const Violation& v);

}  // namespace bosh

#endif  // BOSH_VIOLATION_HPP_
