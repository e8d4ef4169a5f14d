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

#ifndef BOSH_INVOCATION_SCHEMA_HPP_
#define BOSH_INVOCATION_SCHEMA_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bosh/descriptor.hpp"
#include "bosh/violation.hpp"

namespace bosh {

// A flat JSON object mapping input ids to values: strings for String and
// File inputs, numbers for Number, booleans for Flag, arrays for lists.
using Invocation = Json;

// An input "has a value" when its key is present and non-null; a Flag set to
// false counts as absent. Group and dependency rules are defined over this.
bool has_value(const Input& input, const Invocation& invocation);

class InvocationSchemaError : public std::runtime_error {
 public:
  InvocationSchemaError(std::string message, std::vector<Violation> violations);

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Raised when an operation that needs a valid invocation receives one that
// violates the invocation schema.
class InvalidInvocationError : public std::runtime_error {
 public:
  explicit InvalidInvocationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Draft-04 JSON Schema for invocations of `descriptor`. Mutually-exclusive
// groups, requires-inputs and disables-inputs are encoded as per-property
// "dependencies" with "not": {"required": [...]} clauses; one-is-required and
// all-or-none groups become top-level "allOf" entries. Throws
// InvocationSchemaError if the descriptor has validation errors.
Json generate_invocation_schema(const Descriptor& descriptor);

// Number of generate_invocation_schema calls made by this process.
std::uint64_t schema_generation_count();

// Checks `invocation` against the descriptor's embedded invocation schema, or
// a freshly generated one when none is embedded.
std::vector<Violation> validate_invocation(const Descriptor& descriptor,
                                           const Invocation& invocation);

// Returns `descriptor` with its invocation-schema regenerated.
Descriptor attach_schema(Descriptor descriptor);

}  // namespace bosh

#endif  // BOSH_INVOCATION_SCHEMA_HPP_
