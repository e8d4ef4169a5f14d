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


#include <algorithm>
#include <cctype>
#include <set>

#include "bosh/validator.hpp"
#include "doctest.h"
#include "support/support.hpp"

using namespace bosh;
using bosh::testing::fixture_json;
using bosh::testing::fixture_text;

namespace {

std::vector<std::string> rule_ids(const std::vector<Violation>& violations) {
  std::vector<std::string> ids;
  for (const auto& v : violations) ids.push_back(v.rule_id);
  return ids;
}

// "invalid/sem-vk-unique.json" -> "SEM-VK-UNIQUE"
std::string rule_from_name(const std::string& name) {
  std::string stem = name.substr(name.find('/') + 1);
  stem = stem.substr(0, stem.find(".json"));
  std::transform(stem.begin(), stem.end(), stem.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return stem;
}

// Brute-force: does any declared key occur inside a different declared key?
bool substring_oracle(const std::vector<std::string>& keys) {
  for (const auto& a : keys) {
    for (const auto& b : keys) {
      if (a == b) continue;
      for (std::size_t start = 0; start + a.size() <= b.size(); ++start) {
        bool same = true;
        for (std::size_t k = 0; k < a.size() && same; ++k) same = b[start + k] == a[k];
        if (same) return true;
      }
    }
  }
  return false;
}

Json two_key_descriptor(const std::string& a, const std::string& b) {
  Json doc = fixture_json("echo.json");
  doc["inputs"] = Json::array({
      Json{{"id", "a"}, {"name", "A"}, {"type", "String"}, {"value-key", a}},
      Json{{"id", "b"}, {"name", "B"}, {"type", "String"}, {"value-key", b}},
  });
  doc["command-line"] = "tool " + a + " " + b;
  return doc;
}

}  // namespace

TEST_SUITE("validator") {

TEST_CASE("reference fixtures have zero violations") {
  for (const auto& name : bosh::testing::reference_fixture_names()) {
    CAPTURE(name);
    const ValidationReport report = validate(fixture_text(name));
    CHECK(report.passed());
    CHECK(report.violations.empty());
    CHECK(report.semantic_phase_ran);
  }
}

TEST_CASE("each invalid fixture triggers exactly its own rule") {
  const auto names = bosh::testing::invalid_fixture_names();
  CHECK(names.size() == kSemanticRules.size());
  std::set<std::string> covered;
  for (const auto& name : names) {
    CAPTURE(name);
    const ValidationReport report = validate(fixture_text(name));
    const std::string expected = rule_from_name(name);
    CHECK(rule_ids(report.violations) == std::vector<std::string>{expected});
    covered.insert(expected);
  }
  for (const auto rule : kSemanticRules) CHECK(covered.count(std::string(rule)) == 1);
}

TEST_CASE("one-is-required with a required member is only a warning") {
  const ValidationReport report = validate(fixture_text("invalid/sem-onereq-noreq.json"));
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].severity == Severity::kWarning);
  CHECK(report.passed());
}

TEST_CASE("key used only in a file template is a warning") {
  const ValidationReport report = validate(fixture_text("config_only.json"));
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].rule_id == "SEM-VK-REACHABLE");
  CHECK(report.violations[0].severity == Severity::kWarning);
  CHECK(report.violations[0].location == "$.inputs[0].value-key");
  CHECK(report.passed());
}

TEST_CASE("missing schema-version is located") {
  Json doc = fixture_json("echo.json");
  doc.erase("schema-version");
  const auto violations = validate_structure(doc.dump());
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].location == "$.schema-version");
  CHECK_FALSE(validate(doc.dump()).semantic_phase_ran);
}

TEST_CASE("unknown input type is a structural violation") {
  Json doc = fixture_json("echo.json");
  doc["inputs"][0]["type"] = "Float";
  const auto violations = validate_structure(doc.dump());
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].rule_id == "STRUCT-ENUM");
}

TEST_CASE("malformed JSON yields a single parse violation") {
  const ValidationReport report = validate("{\"name\": ");
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].rule_id == "STRUCT-PARSE");
  CHECK_FALSE(report.semantic_phase_ran);
  CHECK_FALSE(report.passed());
}

TEST_CASE("shared value key is allowed inside one mutually-exclusive group") {
  Json doc = two_key_descriptor("[X]", "[X]");
  doc["command-line"] = "tool [X]";
  CHECK(rule_ids(validate(doc.dump()).violations) == std::vector<std::string>{"SEM-VK-UNIQUE"});
  doc["inputs"][0]["optional"] = true;
  doc["inputs"][1]["optional"] = true;
  doc["groups"] = Json::array(
      {Json{{"id", "g"}, {"name", "G"}, {"members", {"a", "b"}}, {"mutually-exclusive", true}}});
  CHECK(validate(doc.dump()).violations.empty());
}

TEST_CASE("nested value keys follow the substring oracle") {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"[A]", "[AB]"}, {"[A]", "[A][B]"}, {"[X]", "[Y]"}, {"IN", "[IN]"}, {"[B]", "x[B]y"}};
  for (const auto& [a, b] : pairs) {
    CAPTURE(a);
    CAPTURE(b);
    const auto ids = rule_ids(validate(two_key_descriptor(a, b).dump()).violations);
    const bool reported = std::count(ids.begin(), ids.end(), "SEM-VK-NONNESTED") > 0;
    CHECK(reported == substring_oracle({a, b}));
  }
  // "[A]" is not a substring of "[AB]"; "[A]" is a substring of "[A][B]".
  CHECK_FALSE(substring_oracle({"[A]", "[AB]"}));
  CHECK(substring_oracle({"[A]", "[A][B]"}));
}

TEST_CASE("three independent violations are reported in catalogue order") {
  Json doc = fixture_json("echo.json");
  doc["inputs"].push_back(Json{{"id", "param"}, {"name", "Again"}, {"type", "String"}});
  doc["inputs"].push_back(Json{{"id", "verbose"},
                               {"name", "Verbose"},
                               {"type", "Flag"},
                               {"optional", true},
                               {"list", true},
                               {"command-line-flag", "-v"}});
  doc["output-files"].push_back(
      Json{{"id", "copy"}, {"name", "Copy"}, {"path-template", "output.txt"}});
  const auto ids = rule_ids(validate(doc.dump()).violations);
  // Per-rule checks done by hand on the document above.
  const bool duplicate_id = doc["inputs"][0]["id"] == doc["inputs"][1]["id"];
  const bool duplicate_path =
      doc["output-files"][0]["path-template"] == doc["output-files"][1]["path-template"];
  const bool list_flag = doc["inputs"][2]["list"] == true;
  REQUIRE((duplicate_id && duplicate_path && list_flag));
  CHECK(ids == std::vector<std::string>{"SEM-ID-UNIQUE", "SEM-PT-UNIQUE", "SEM-FLAG-SHAPE"});
}

TEST_CASE("validation is complete, not fail-fast") {
  // k independent duplicate path templates give k violations.
  for (int k = 1; k <= 4; ++k) {
    Json doc = fixture_json("echo.json");
    for (int i = 0; i < k; ++i) {
      doc["output-files"].push_back(Json{{"id", "dup" + std::to_string(i)},
                                         {"name", "Dup"},
                                         {"path-template", "output.txt"}});
    }
    CHECK(validate(doc.dump()).violations.size() == static_cast<std::size_t>(k));
  }
}

TEST_CASE("dangling requires is reported structurally") {
  Json doc = fixture_json("dependencies.json");
  doc["inputs"][1]["requires-inputs"] = Json::array({"nope"});
  const ValidationReport report = validate(doc.dump());
  CHECK(rule_ids(report.violations) == std::vector<std::string>{"STRUCT-REF"});
  CHECK_FALSE(report.passed());
}

TEST_CASE("reports are deterministic") {
  for (const auto& name : bosh::testing::invalid_fixture_names()) {
    const std::string text = fixture_text(name);
    CHECK(format_report(validate(text)) == format_report(validate(text)));
    CHECK(report_to_json(validate(text)).dump() == report_to_json(validate(text)).dump());
  }
}

TEST_CASE("line and JSON report formats") {
  const ValidationReport report = validate(fixture_text("invalid/sem-pt-unique.json"));
  CHECK(format_report(report) ==
        "error SEM-PT-UNIQUE $.output-files[1].path-template path-template \"out.txt\" is used "
        "by another output\n");
  const Json doc = report_to_json(report);
  CHECK(doc["valid"] == false);
  REQUIRE(doc["violations"].size() == 1);
  CHECK(doc["violations"][0]["rule-id"] == "SEM-PT-UNIQUE");
  CHECK(doc["violations"][0]["severity"] == "error");
}

}  // TEST_SUITE
