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


#include "glob_listing.hpp"

#include <algorithm>

namespace bosh::oracle {

namespace fs = std::filesystem;

bool wildcard_match(const std::string& pattern, const std::string& name) {
  if (!name.empty() && name[0] == '.' && (pattern.empty() || pattern[0] != '.')) return false;
  // dp[i][j]: pattern[0..i) matches name[0..j)
  std::vector<std::vector<bool>> dp(pattern.size() + 1, std::vector<bool>(name.size() + 1));
  dp[0][0] = true;
  for (std::size_t i = 1; i <= pattern.size(); ++i) {
    for (std::size_t j = 0; j <= name.size(); ++j) {
      if (pattern[i - 1] == '*') {
        dp[i][j] = dp[i - 1][j] || (j > 0 && dp[i][j - 1]);
      } else {
        dp[i][j] = j > 0 && dp[i - 1][j - 1] && pattern[i - 1] == name[j - 1];
      }
    }
  }
  return dp[pattern.size()][name.size()];
}

namespace {

std::vector<std::string> split(const std::string& path) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : path) {
    if (c == '/') {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

}  // namespace

std::vector<std::string> listing_glob(const fs::path& root, const std::string& pattern) {
  const std::vector<std::string> want = split(pattern);
  std::vector<std::string> found;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    const std::string relative = fs::relative(entry.path(), root).generic_string();
    const std::vector<std::string> have = split(relative);
    if (have.size() != want.size()) continue;
    bool all = true;
    for (std::size_t k = 0; k < have.size() && all; ++k) all = wildcard_match(want[k], have[k]);
    if (all) found.push_back(relative);
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace bosh::oracle
