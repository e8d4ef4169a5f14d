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

#include "bosh/descriptor.hpp"
#include "doctest.h"
#include "support/support.hpp"

using namespace bosh;
using bosh::testing::fixture_descriptor;
using bosh::testing::fixture_json;
using bosh::testing::fixture_text;

namespace {

bool has_issue(const std::vector<StructuralIssue>& issues, const std::string& code,
               const std::string& location) {
  return std::any_of(issues.begin(), issues.end(), [&](const StructuralIssue& i) {
    return i.code == code && i.location == location;
  });
}

}  // namespace

TEST_SUITE("descriptor") {

TEST_CASE("minimal echo descriptor parses") {
  const Descriptor d = fixture_descriptor("echo.json");
  CHECK(d.name == "echo");
  CHECK(d.tool_version == "1.0");
  CHECK(d.schema_version == "0.5");
  CHECK(d.command_line == "echo [PARAM] > output.txt");
  REQUIRE(d.inputs.size() == 1);
  CHECK(d.inputs[0].id == "param");
  CHECK(d.inputs[0].type == InputType::kNumber);
  CHECK(d.inputs[0].value_key == "[PARAM]");
  CHECK_FALSE(d.inputs[0].is_optional());
  REQUIRE(d.output_files.size() == 1);
  CHECK(d.output_files[0].path_template == "output.txt");
  CHECK_FALSE(d.container.has_value());
}

TEST_CASE("empty document reports every missing top-level field") {
  const DescriptorReadResult r = read_descriptor("{}");
  CHECK_FALSE(r.descriptor.has_value());
  for (const char* key : {"name", "tool-version", "description", "command-line", "schema-version"}) {
    CHECK(has_issue(r.issues, "STRUCT-MISSING", std::string("$.") + key));
  }
  CHECK_THROWS_AS(parse_descriptor("{}"), DescriptorError);
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_json_text("{\n  \"name\": \"x\",\n  oops\n}");
    FAIL("expected a syntax error");
  } catch (const JsonSyntaxError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() >= 3);
  }
}

TEST_CASE("wrong JSON type names the field path") {
  Json doc = fixture_json("echo.json");
  doc["inputs"][0]["optional"] = "yes";
  const auto r = read_descriptor_json(doc);
  CHECK(has_issue(r.issues, "STRUCT-TYPE", "$.inputs[0].optional"));
  CHECK_THROWS_AS(parse_descriptor_json(doc), DescriptorError);
}

TEST_CASE("closed type enumeration") {
  Json doc = fixture_json("echo.json");
  doc["inputs"][0]["type"] = "Float";
  CHECK(has_issue(read_descriptor_json(doc).issues, "STRUCT-ENUM", "$.inputs[0].type"));
}

TEST_CASE("round trip is a fixed point for every fixture") {
  for (const auto& name : bosh::testing::valid_fixture_names()) {
    CAPTURE(name);
    const Descriptor once = fixture_descriptor(name);
    const Json text = serialize_descriptor(once);
    const Descriptor twice = parse_descriptor(text.dump());
    CHECK(once == twice);
    CHECK(serialize_descriptor(twice).dump() == text.dump());
  }
}

TEST_CASE("empty input and output lists survive the round trip") {
  Json doc = fixture_json("echo.json");
  doc["inputs"] = Json::array();
  doc["output-files"] = Json::array();
  doc["command-line"] = "echo hello";
  const Descriptor d = parse_descriptor_json(doc);
  CHECK(d.inputs.empty());
  CHECK(d.output_files.empty());
  const Json again = serialize_descriptor(d);
  CHECK(again["inputs"] == Json::array());
  CHECK(again["output-files"] == Json::array());
  CHECK(parse_descriptor_json(again) == d);
}

TEST_CASE("custom properties are preserved verbatim") {
  Json doc = fixture_json("echo.json");
  doc["custom"] = Json::parse(R"({"vip:miccai-challenge-team-name": "x",
                                  "nested": {"list": [1, 2.5, null, {"k": false}]}})");
  const Json out = serialize_descriptor(parse_descriptor_json(doc));
  CHECK(out["custom"] == doc["custom"]);
  CHECK(out["custom"].dump() == doc["custom"].dump());
}

TEST_CASE("absent optional fields are omitted, never null") {
  const Json out = serialize_descriptor(fixture_descriptor("echo.json"));
  for (const char* key : {"groups", "container", "suggested-resources", "custom",
                          "invocation-schema"}) {
    CHECK_FALSE(out.contains(key));
  }
  const Json& input = out["inputs"][0];
  for (const char* key : {"optional", "default-value", "command-line-flag", "list"}) {
    CHECK_FALSE(input.contains(key));
  }
  CHECK(out.dump().find("null") == std::string::npos);
}

TEST_CASE("serialized key order follows the model declaration order") {
  const Json out = serialize_descriptor(fixture_descriptor("groups.json"));
  std::vector<std::string> keys;
  for (auto it = out.begin(); it != out.end(); ++it) keys.push_back(it.key());
  const std::vector<std::string> expected = {
      "name",   "tool-version", "description", "schema-version", "command-line",
      "inputs", "output-files", "groups",      "container",      "suggested-resources",
      "custom"};
  CHECK(keys == expected);
}

TEST_CASE("input and output order is preserved") {
  const Descriptor d = fixture_descriptor("groups.json");
  std::vector<std::string> ids;
  for (const auto& i : d.inputs) ids.push_back(i.id);
  CHECK(ids == std::vector<std::string>{"mode", "fast", "slow", "x", "y", "subjects", "level"});
  const Json out = serialize_descriptor(d);
  CHECK(out["output-files"][0]["id"] == "out_dir");
  CHECK(out["output-files"][1]["id"] == "plots");
}

TEST_CASE("unknown top-level keys are kept and reported") {
  Json doc = fixture_json("echo.json");
  doc["colour"] = "blue";
  const auto r = read_descriptor_json(doc);
  REQUIRE(r.descriptor.has_value());
  CHECK(has_issue(r.issues, "STRUCT-UNKNOWN-KEY", "$.colour"));
  CHECK(serialize_descriptor(*r.descriptor)["colour"] == "blue");
}

TEST_CASE("only schema version 0.5 is accepted") {
  Json doc = fixture_json("echo.json");
  doc["schema-version"] = "0.4";
  CHECK(has_issue(read_descriptor_json(doc).issues, "STRUCT-SCHEMA-VERSION", "$.schema-version"));
}

TEST_CASE("container and resource fields") {
  const Descriptor d = fixture_descriptor("groups.json");
  REQUIRE(d.container.has_value());
  CHECK(d.container->type == ContainerType::kDocker);
  CHECK(d.container->image == "example/group-tool:2.1");
  REQUIRE(d.suggested_resources.has_value());
  CHECK(d.suggested_resources->cpu_cores == Json(2));

  Json doc = fixture_json("groups.json");
  doc["suggested-resources"]["ram"] = -1;
  CHECK(has_issue(read_descriptor_json(doc).issues, "STRUCT-RESOURCE",
                  "$.suggested-resources.ram"));
  doc = fixture_json("groups.json");
  doc["container"]["url"] = "http://example.org/root.tar";
  CHECK(has_issue(read_descriptor_json(doc).issues, "STRUCT-CONTAINER", "$.container"));
}

TEST_CASE("number types survive the round trip") {
  const Json out = serialize_descriptor(fixture_descriptor("number_range.json"));
  CHECK(out["inputs"][0]["minimum"].is_number_integer());
  Json doc = fixture_json("number_range.json");
  doc["inputs"][0]["maximum"] = 1.5;
  CHECK(serialize_descriptor(parse_descriptor_json(doc))["inputs"][0]["maximum"].is_number_float());
}

TEST_CASE("read_text_file rejects directories and missing files") {
  CHECK_THROWS(read_text_file(BOSH_FIXTURE_DIR));
  CHECK_THROWS(read_text_file(std::string(BOSH_FIXTURE_DIR) + "/does-not-exist.json"));
  CHECK(read_text_file(bosh::testing::fixture_path("echo.json").string()) ==
        fixture_text("echo.json"));
}

}  // TEST_SUITE
