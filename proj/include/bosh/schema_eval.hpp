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

// Minimal JSON-Schema (draft-04) evaluator covering the vocabulary emitted by
// generate_invocation_schema: type, enum, minimum/maximum with boolean or
// numeric exclusivity, required, properties, additionalProperties, items,
// dependencies, allOf, anyOf, oneOf, not. Other keywords are ignored, as a
// conforming validator ignores unknown keywords.

#ifndef BOSH_SCHEMA_EVAL_HPP_
#define BOSH_SCHEMA_EVAL_HPP_

#include <vector>

#include "bosh/json_util.hpp"
#include "bosh/violation.hpp"

namespace bosh {

std::vector<Violation> evaluate_schema(const Json& schema, const Json& instance);

bool schema_accepts(const Json& schema, const Json& instance);

}  // namespace bosh

#endif  // BOSH_SCHEMA_EVAL_HPP_
