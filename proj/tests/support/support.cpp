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


#include "support.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace bosh::testing {

namespace fs = std::filesystem;

fs::path fixture_path(const std::string& relative) { return fs::path(BOSH_FIXTURE_DIR) / relative; }

std::string fixture_text(const std::string& relative) { return read_file(fixture_path(relative)); }

Json fixture_json(const std::string& relative) { return parse_json_text(fixture_text(relative)); }

Descriptor fixture_descriptor(const std::string& relative) {
  return parse_descriptor(fixture_text(relative));
}

namespace {

std::vector<std::string> json_files(const fs::path& dir, const std::string& prefix) {
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      names.push_back(prefix + entry.path().filename().string());
    }
  }
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace

std::vector<std::string> valid_fixture_names() { return json_files(BOSH_FIXTURE_DIR, ""); }

std::vector<std::string> reference_fixture_names() {
  return {"cmdline_example.json", "echo.json", "number_range.json", "log_stripping.json", "config_template.json"};
}

std::vector<std::string> invalid_fixture_names() {
  return json_files(fs::path(BOSH_FIXTURE_DIR) / "invalid", "invalid/");
}

fs::path bosh_binary() { return BOSH_BINARY; }
fs::path python_interpreter() { return BOSH_PYTHON; }
fs::path jsonschema_oracle_script() { return BOSH_JSONSCHEMA_ORACLE; }

TempDir::TempDir() {
  std::random_device device;
  const fs::path base = fs::temp_directory_path();
  for (int attempt = 0; attempt < 100; ++attempt) {
    fs::path candidate = base / ("bosh-test-" + std::to_string(device()));
    if (fs::create_directory(candidate)) {
      path_ = candidate;
      return;
    }
  }
  throw std::runtime_error("cannot create a temporary directory");
}

TempDir::~TempDir() {
  std::error_code ignored;
  fs::remove_all(path_, ignored);
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

CommandResult run_shell(const std::string& command) {
  TempDir scratch;
  const fs::path out = scratch.path() / "out";
  const fs::path err = scratch.path() / "err";
  const std::string line = command + " >'" + out.string() + "' 2>'" + err.string() + "'";
  const int status = std::system(line.c_str());
  CommandResult result;
  if (status != -1 && WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  result.out = read_file(out);
  result.err = read_file(err);
  return result;
}

}  // namespace bosh::testing
