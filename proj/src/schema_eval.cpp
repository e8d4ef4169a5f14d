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

#include "bosh/schema_eval.hpp"

#include <cmath>
#include <string>

namespace bosh {

namespace {

bool type_matches(const Json& instance, const std::string& type) {
  if (type == "object") return instance.is_object();
  if (type == "array") return instance.is_array();
  if (type == "string") return instance.is_string();
  if (type == "boolean") return instance.is_boolean();
  if (type == "null") return instance.is_null();
  if (type == "number") return instance.is_number();
  if (type == "integer") {
    if (instance.is_number_integer()) return true;
    if (!instance.is_number_float()) return false;
    const double value = instance.get<double>();
    return std::isfinite(value) && std::trunc(value) == value;
  }
  return false;
}

std::string describe(const Json& schema, const std::string& fallback) {
  const auto it = schema.find("description");
  if (it != schema.end() && it->is_string()) return it->get<std::string>();
  return fallback;
}

// Evaluates `schema` against `instance`. With `out == nullptr` it only answers
// accept/reject and stops at the first failure; otherwise every failing
// keyword appends a violation. `context` overrides keyword-derived rule ids
// for assertions nested under dependencies or top-level combinators.
class Evaluator {
 public:
  bool eval(const Json& schema, const Json& instance, const std::string& location,
            const std::string& context, std::vector<Violation>* out) {
    if (schema.is_boolean()) {
      if (schema.get<bool>()) return true;
      fail(out, rule(context, "INV-SCHEMA"), location, "no value is allowed here");
      return false;
    }
    if (!schema.is_object()) return true;

    bool ok = true;
    auto keep_going = [&](bool passed) {
      if (!passed) ok = false;
      return passed || out != nullptr;
    };

    if (const auto it = schema.find("type"); it != schema.end()) {
      bool matched = false;
      if (it->is_string()) {
        matched = type_matches(instance, it->get<std::string>());
      } else if (it->is_array()) {
        for (const auto& t : *it) {
          if (t.is_string() && type_matches(instance, t.get<std::string>())) matched = true;
        }
      } else {
        matched = true;
      }
      if (!matched) {
        fail(out, rule(context, "INV-TYPE"), location,
             "expected type " + it->dump() + ", got " + instance.dump());
      }
      if (!keep_going(matched)) return false;
    }

    if (const auto it = schema.find("enum"); it != schema.end() && it->is_array()) {
      bool found = false;
      for (const auto& choice : *it) {
        if (json_equal(choice, instance)) {
          found = true;
          break;
        }
      }
      if (!found) {
        fail(out, rule(context, "INV-ENUM"), location,
             instance.dump() + " is not one of " + it->dump());
      }
      if (!keep_going(found)) return false;
    }

    if (instance.is_number() && !keep_going(check_range(schema, instance, location, context, out))) {
      return false;
    }

    if (instance.is_object()) {
      if (const auto it = schema.find("required"); it != schema.end() && it->is_array()) {
        for (const auto& name : *it) {
          if (!name.is_string()) continue;
          const std::string key = name.get<std::string>();
          if (!instance.contains(key)) {
            fail(out, rule(context, "INV-REQUIRED"), path_key(location, key),
                 describe(schema, "required input \"" + key + "\" is missing"));
            if (!keep_going(false)) return false;
          }
        }
      }

      const auto properties = schema.find("properties");
      const bool has_properties = properties != schema.end() && properties->is_object();
      for (auto member = instance.begin(); member != instance.end(); ++member) {
        const std::string& key = member.key();
        const std::string where = path_key(location, key);
        if (has_properties) {
          if (const auto sub = properties->find(key); sub != properties->end()) {
            if (!keep_going(eval(*sub, member.value(), where, context, out))) return false;
            continue;
          }
        }
        if (const auto extra = schema.find("additionalProperties"); extra != schema.end()) {
          if (extra->is_boolean() && !extra->get<bool>()) {
            fail(out, rule(context, "INV-UNKNOWN"), where, "\"" + key + "\" is not an input");
            if (!keep_going(false)) return false;
          } else if (extra->is_object()) {
            if (!keep_going(eval(*extra, member.value(), where, context, out))) return false;
          }
        }
      }

      if (const auto deps = schema.find("dependencies"); deps != schema.end() && deps->is_object()) {
        for (auto dep = deps->begin(); dep != deps->end(); ++dep) {
          if (!instance.contains(dep.key())) continue;
          bool passed = true;
          if (dep.value().is_array()) {
            for (const auto& name : dep.value()) {
              if (name.is_string() && !instance.contains(name.get<std::string>())) {
                passed = false;
                fail(out, "INV-DEPENDENCY", path_key(location, dep.key()),
                     "\"" + dep.key() + "\" requires \"" + name.get<std::string>() + "\"");
                if (out == nullptr) break;
              }
            }
          } else {
            passed = eval(dep.value(), instance, path_key(location, dep.key()), "INV-DEPENDENCY",
                          out);
          }
          if (!keep_going(passed)) return false;
        }
      }
    }

    if (instance.is_array()) {
      if (const auto items = schema.find("items"); items != schema.end()) {
        for (std::size_t i = 0; i < instance.size(); ++i) {
          const Json* sub = nullptr;
          if (items->is_array()) {
            if (i < items->size()) sub = &(*items)[i];
          } else {
            sub = &*items;
          }
          if (sub != nullptr &&
              !keep_going(eval(*sub, instance[i], path_index(location, i), context, out))) {
            return false;
          }
        }
      }
    }

    // Top-level combinators carry group constraints.
    const std::string combinator_context =
        !context.empty() ? context : (location == "$" ? "INV-GROUP" : "INV-SCHEMA");

    if (const auto it = schema.find("allOf"); it != schema.end() && it->is_array()) {
      for (const auto& sub : *it) {
        if (!keep_going(eval(sub, instance, location, combinator_context, out))) return false;
      }
    }

    if (const auto it = schema.find("anyOf"); it != schema.end() && it->is_array()) {
      bool any = false;
      for (const auto& sub : *it) {
        if (eval(sub, instance, location, combinator_context, nullptr)) {
          any = true;
          break;
        }
      }
      if (!any) {
        fail(out, combinator_context, location,
             describe(schema, "does not satisfy any of the alternatives"));
      }
      if (!keep_going(any)) return false;
    }

    if (const auto it = schema.find("oneOf"); it != schema.end() && it->is_array()) {
      int matches = 0;
      for (const auto& sub : *it) {
        if (eval(sub, instance, location, combinator_context, nullptr)) ++matches;
      }
      if (matches != 1) {
        fail(out, combinator_context, location,
             describe(schema, "must satisfy exactly one alternative, satisfies " +
                                  std::to_string(matches)));
      }
      if (!keep_going(matches == 1)) return false;
    }

    if (const auto it = schema.find("not"); it != schema.end()) {
      const bool inner = eval(*it, instance, location, combinator_context, nullptr);
      if (inner) {
        fail(out, combinator_context, location,
             describe(schema, describe(*it, "matches a forbidden schema " + it->dump())));
      }
      if (!keep_going(!inner)) return false;
    }

    return ok;
  }

 private:
  static std::string rule(const std::string& context, const char* fallback) {
    return context.empty() ? std::string(fallback) : context;
  }

  static void fail(std::vector<Violation>* out, std::string rule_id, std::string location,
                   std::string message) {
    if (out == nullptr) return;
    out->push_back({std::move(rule_id), Severity::kError, std::move(message), std::move(location)});
  }

  // JSON-Schema equality: numbers compare by value, booleans never equal
  // numbers.
  static bool json_equal(const Json& a, const Json& b) {
    if (a.is_number() && b.is_number()) return a.get<double>() == b.get<double>();
    if (a.is_boolean() != b.is_boolean()) return false;
    if (a.is_array() && b.is_array()) {
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!json_equal(a[i], b[i])) return false;
      }
      return true;
    }
    return a == b;
  }

  bool check_range(const Json& schema, const Json& instance, const std::string& location,
                   const std::string& context, std::vector<Violation>* out) {
    const double x = instance.get<double>();
    bool ok = true;
    const auto bound = [&](const char* key, const char* exclusive_key, bool lower) {
      const auto it = schema.find(key);
      const auto ex = schema.find(exclusive_key);
      if (it != schema.end() && it->is_number()) {
        const double limit = it->get<double>();
        const bool exclusive = ex != schema.end() && ex->is_boolean() && ex->get<bool>();
        const bool passed = lower ? (exclusive ? x > limit : x >= limit)
                                  : (exclusive ? x < limit : x <= limit);
        if (!passed) {
          ok = false;
          fail(out, rule(context, "INV-RANGE"), location,
               instance.dump() + (lower ? " is below " : " is above ") +
                   (exclusive ? "exclusive " : "") + std::string(lower ? "minimum " : "maximum ") +
                   it->dump());
        }
      }
      // draft-06 numeric form
      if (ex != schema.end() && ex->is_number()) {
        const double limit = ex->get<double>();
        const bool passed = lower ? x > limit : x < limit;
        if (!passed) {
          ok = false;
          fail(out, rule(context, "INV-RANGE"), location,
               instance.dump() + (lower ? " is not above " : " is not below ") + ex->dump());
        }
      }
    };
    bound("minimum", "exclusiveMinimum", true);
    if (!ok && out == nullptr) return false;
    bound("maximum", "exclusiveMaximum", false);
    return ok;
  }
};

}  // namespace

std::vector<Violation> evaluate_schema(const Json& schema, const Json& instance) {
  std::vector<Violation> out;
  Evaluator().eval(schema, instance, "$", "", &out);
  return out;
}

bool schema_accepts(const Json& schema, const Json& instance) {
  return Evaluator().eval(schema, instance, "$", "", nullptr);
}

}  // namespace bosh
