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

#ifndef BOSH_SIMULATOR_HPP_
#define BOSH_SIMULATOR_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bosh/command_builder.hpp"
#include "bosh/descriptor.hpp"
#include "bosh/invocation_schema.hpp"

namespace bosh {

namespace sampling {
inline constexpr int kRetryBudget = 1000;
inline constexpr double kDefaultMinimum = 0.0;
inline constexpr double kDefaultSpan = 100.0;
inline constexpr int kMinListLength = 1;
inline constexpr int kMaxListLength = 3;
inline constexpr double kOptionalProbability = 0.5;
}  // namespace sampling

class UnsatisfiableConstraintsError : public std::runtime_error {
 public:
  UnsatisfiableConstraintsError(std::string message, std::vector<std::string> constraints);

  // Group ids and ids of inputs carrying requires/disables lists.
  const std::vector<std::string>& constraints() const { return constraints_; }

 private:
  std::vector<std::string> constraints_;
};

// Deterministic in (descriptor, seed). The result passes
// validate_invocation(descriptor, ·).
Invocation random_invocation(const Descriptor& descriptor, std::uint64_t seed);

struct Simulation {
  Invocation invocation;
  CommandLinePlan plan;
};

// Exactly one of `invocation` / `seed` must be set. A provided invocation is
// validated first (InvalidInvocationError). Nothing is written or executed.
Simulation simulate_plan(const Descriptor& descriptor, const std::optional<Invocation>& invocation,
                         std::optional<std::uint64_t> seed);

std::string simulate(const Descriptor& descriptor, const std::optional<Invocation>& invocation,
                     std::optional<std::uint64_t> seed);

}  // namespace bosh

#endif  // BOSH_SIMULATOR_HPP_
