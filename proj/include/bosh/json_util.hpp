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

#ifndef BOSH_JSON_UTIL_HPP_
#define BOSH_JSON_UTIL_HPP_

#include <string>

#include <json.hpp>

namespace bosh {

// Object keys keep insertion (= source) order, which makes serialization
// deterministic and keeps custom properties verbatim.
using Json = nlohmann::ordered_json;

// Renders a JSON number the way it is spliced into command lines: integers
// (and integral floats below 2^53) without a decimal point, everything else
// as the shortest decimal that round-trips.
std::string render_number(const Json& number);

// Dotted/bracketed locator helpers, "$" is the document root.
std::string path_key(const std::string& parent, const std::string& key);
std::string path_index(const std::string& parent, std::size_t index);

}  // namespace bosh

#endif  // BOSH_JSON_UTIL_HPP_
