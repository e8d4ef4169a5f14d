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

#include "bosh/command_builder.hpp"
#include "bosh/invocation_schema.hpp"
#include "bosh/simulator.hpp"
#include "doctest.h"
#include "support/support.hpp"

using namespace bosh;
using bosh::testing::fixture_descriptor;
using bosh::testing::fixture_json;

TEST_SUITE("simulator") {

TEST_CASE("single required number") {
  const Descriptor d = fixture_descriptor("echo.json");
  const Invocation inv = random_invocation(d, 42);
  REQUIRE(inv.contains("param"));
  CHECK(inv["param"].is_number());
  CHECK(inv.size() == 1);
  CHECK(validate_invocation(d, inv).empty());
}

TEST_CASE("mutually exclusive members never appear together") {
  const Descriptor d = fixture_descriptor("mutex.json");
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Invocation inv = random_invocation(d, seed);
    CHECK(inv.contains("num_input") + inv.contains("str_input") <= 1);
  }
}

TEST_CASE("one-is-required members are each sampled often") {
  // speed = one-is-required {fast, slow}. With a presence sampler that is
  // uniform over valid patterns each member has probability well above 1/4,
  // so fewer than 100 hits in 1000 draws has binomial probability < 1e-6.
  const Descriptor d = fixture_descriptor("groups.json");
  int fast = 0;
  int slow = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Invocation inv = random_invocation(d, seed);
    const bool f = has_value(*d.find_input("fast"), inv);
    const bool s = has_value(*d.find_input("slow"), inv);
    CHECK((f || s));
    fast += f;
    slow += s;
  }
  CHECK(fast >= 100);
  CHECK(slow >= 100);
}

TEST_CASE("value sampling respects ranges, choices and list lengths") {
  const Descriptor d = fixture_descriptor("groups.json");
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Invocation inv = random_invocation(d, seed);
    if (inv.contains("x")) {
      CHECK(inv["x"].get<double>() >= -5);
      CHECK(inv["x"].get<double>() < 5);
    }
    if (inv.contains("level")) {
      CHECK(inv["level"].size() >= 1);
      CHECK(inv["level"].size() <= 3);
    }
    if (inv.contains("subjects")) {
      for (const auto& path : inv["subjects"]) {
        const std::string p = path.get<std::string>();
        CHECK(p.size() > 4);
        CHECK(p.substr(p.size() - 4) == ".txt");
      }
    }
  }
}

TEST_CASE("simulate with a given invocation") {
  CHECK(simulate(fixture_descriptor("echo.json"), Json::parse(R"({"param": 5})"), std::nullopt) ==
        "echo 5 > output.txt");
  CHECK(simulate(fixture_descriptor("number_range.json"), Json::parse(R"({"num_input": 0.3})"),
                 std::nullopt) == "tool -n=0.3");
}

TEST_CASE("seeded simulation is stable") {
  const Descriptor d = fixture_descriptor("echo.json");
  const std::string first = simulate(d, std::nullopt, 7);
  CHECK(first == simulate(d, std::nullopt, 7));
  const Invocation inv = random_invocation(d, 7);
  CHECK(first == "echo " + render_value(inv["param"]) + " > output.txt");
}

TEST_CASE("exactly one of invocation and seed") {
  const Descriptor d = fixture_descriptor("echo.json");
  CHECK_THROWS_AS(simulate(d, std::nullopt, std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(simulate(d, Json::parse(R"({"param": 1})"), 3), std::invalid_argument);
}

TEST_CASE("invalid invocation produces violations, not a command") {
  const Descriptor d = fixture_descriptor("number_range.json");
  try {
    simulate(d, Json::parse(R"({"num_input": 0})"), std::nullopt);
    FAIL("expected a validation failure");
  } catch (const InvalidInvocationError& e) {
    REQUIRE_FALSE(e.violations().empty());
    CHECK(e.violations()[0].rule_id == "INV-RANGE");
  }
}

TEST_CASE("unsatisfiable constraints are named") {
  Json doc = fixture_json("dependencies.json");
  // a is required; b requires c and c disables b; group needs b.
  doc["inputs"][2]["disables-inputs"] = Json::array({"b"});
  doc["groups"] = Json::array(
      {Json{{"id", "need_b"}, {"name", "Need b"}, {"members", {"b"}}, {"one-is-required", true}}});
  const Descriptor d = parse_descriptor_json(doc);
  try {
    random_invocation(d, 1);
    FAIL("expected unsatisfiable constraints");
  } catch (const UnsatisfiableConstraintsError& e) {
    const auto& names = e.constraints();
    CHECK(std::find(names.begin(), names.end(), "need_b") != names.end());
    CHECK(std::find(names.begin(), names.end(), "b") != names.end());
    CHECK(std::find(names.begin(), names.end(), "c") != names.end());
  }
}

TEST_CASE("simulated commands never contain value keys") {
  for (const auto& name : bosh::testing::valid_fixture_names()) {
    const Descriptor d = fixture_descriptor(name);
    const auto keys = declared_value_keys(d);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const std::string command = simulate(d, std::nullopt, seed);
      for (const auto& key : keys) {
        CAPTURE(name);
        CHECK(command.find(key) == std::string::npos);
      }
    }
  }
}

TEST_CASE("simulation writes nothing") {
  bosh::testing::TempDir dir;
  const auto cwd = std::filesystem::current_path();
  std::filesystem::current_path(dir.path());
  simulate_plan(fixture_descriptor("cmdline_example.json"), std::nullopt, 3);
  std::filesystem::current_path(cwd);
  CHECK(std::filesystem::is_empty(dir.path()));
}

}  // TEST_SUITE
