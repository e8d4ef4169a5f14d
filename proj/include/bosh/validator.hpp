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

#ifndef BOSH_VALIDATOR_HPP_
#define BOSH_VALIDATOR_HPP_

#include <array>
#include <string_view>
#include <vector>

#include "bosh/descriptor.hpp"
#include "bosh/violation.hpp"

namespace bosh {

// Semantic rule ids, in evaluation order.
inline constexpr std::array<std::string_view, 14> kSemanticRules = {
    "SEM-VK-UNIQUE",        "SEM-ID-UNIQUE",      "SEM-VK-REACHABLE",  "SEM-VK-NONNESTED",
    "SEM-PT-UNIQUE",        "SEM-FLAG-SHAPE",     "SEM-DEFAULT-RESTRICT",
    "SEM-REQ-DIS-CONFLICT", "SEM-REQUIRED-NODEP", "SEM-GROUP-MEMBERS", "SEM-MUTEX-NOREQ",
    "SEM-ONEREQ-NOREQ",     "SEM-AON-NOREQ",      "SEM-LIST-WILDCARD",
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool semantic_phase_ran = false;

  bool passed() const { return !has_errors(violations); }
};

// Grammar conformance: syntax, required fields, JSON types, enums, unknown
// keys, schema version. Never throws.
std::vector<Violation> validate_structure(std::string_view text);

// Cross-field rules. Reports every violation, never stops early.
std::vector<Violation> validate_semantics(const Descriptor& descriptor);

// Structure first; semantics only when the structure is clean.
ValidationReport validate(std::string_view text);

// Both phases over an in-memory descriptor (structure is re-checked on its
// serialization). Used as the precondition gate by downstream operations.
ValidationReport validate_descriptor(const Descriptor& descriptor);

std::string format_report(const ValidationReport& report);
Json report_to_json(const ValidationReport& report);

}  // namespace bosh

#endif  // BOSH_VALIDATOR_HPP_
