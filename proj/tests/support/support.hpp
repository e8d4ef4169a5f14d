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


// Fixture lookup, temporary directories and small helpers shared by the
// unit tests and the acceptance runner.

#ifndef BOSH_TESTS_SUPPORT_HPP_
#define BOSH_TESTS_SUPPORT_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "bosh/descriptor.hpp"

namespace bosh::testing {

std::filesystem::path fixture_path(const std::string& relative);
std::string fixture_text(const std::string& relative);
Json fixture_json(const std::string& relative);
Descriptor fixture_descriptor(const std::string& relative);

// Valid descriptor fixtures (top level of fixtures/), sorted by name.
std::vector<std::string> valid_fixture_names();
// The five reference fixtures expected to validate with zero violations.
std::vector<std::string> reference_fixture_names();
// fixtures/invalid/*.json, sorted.
std::vector<std::string> invalid_fixture_names();

std::filesystem::path bosh_binary();
std::filesystem::path python_interpreter();
std::filesystem::path jsonschema_oracle_script();

class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

void write_file(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

struct CommandResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs a shell command line, capturing both streams.
CommandResult run_shell(const std::string& command);

}  // namespace bosh::testing

#endif  // BOSH_TESTS_SUPPORT_HPP_
