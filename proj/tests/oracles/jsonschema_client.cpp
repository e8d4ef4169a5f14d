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


#include "jsonschema_client.hpp"

#include "../support/support.hpp"

namespace bosh::oracle {

using testing::TempDir;

void JsonSchemaBatch::use_schema(const Json& schema) {
  lines_ += Json{{"schema", schema}}.dump() + "\n";
}

void JsonSchemaBatch::add_instance(const Json& instance) {
  lines_ += Json{{"instance", instance}}.dump() + "\n";
  ++count_;
}

std::optional<std::vector<bool>> JsonSchemaBatch::run(std::string& error) const {
  TempDir scratch;
  const auto source = scratch.path() / "questions.jsonl";
  const auto target = scratch.path() / "verdicts.txt";
  testing::write_file(source, lines_);
  const auto result = testing::run_shell("'" + testing::python_interpreter().string() + "' '" +
                                         testing::jsonschema_oracle_script().string() + "' '" +
                                         source.string() + "' '" + target.string() + "'");
  if (result.exit_code != 0) {
    error = "jsonschema judge failed: " + result.err;
    return std::nullopt;
  }
  const std::string text = testing::read_file(target);
  std::vector<bool> verdicts;
  for (char c : text) {
    if (c == '1') verdicts.push_back(true);
    if (c == '0') verdicts.push_back(false);
  }
  if (verdicts.size() != count_) {
    error = "jsonschema judge returned " + std::to_string(verdicts.size()) + " verdicts for " +
            std::to_string(count_) + " instances";
    return std::nullopt;
  }
  return verdicts;
}

bool jsonschema_available() {
  const auto result = testing::run_shell("'" + testing::python_interpreter().string() +
                                         "' -c 'import jsonschema'");
  return result.exit_code == 0;
}

}  // namespace bosh::oracle
