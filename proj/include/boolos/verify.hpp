// Copyright 2026 The Boolos Engine Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "boolos/oracle.hpp"
#include "boolos/search.hpp"
#include "boolos/world.hpp"

namespace boolos {

struct VerifyConfig {
  RandomVariant variant = RandomVariant::BoolosCoin;
  Prior prior = uniform_prior();
  SearchConfig search;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  bool resource_limited = false;
  std::string detail;
};

/// Counting bounds, depth 1-2 impossibility, the built-in three-question
/// solver, the admissibility table of the self-referential question, its
/// first-step admissibility chances and the published-vs-computed table.
std::vector<CheckResult> run_verification(const VerifyConfig& config);

/// 0 if every check passed, 3 if any failed on the resource cap, else 1.
int verification_exit_code(const std::vector<CheckResult>& results);

nlohmann::ordered_json to_json(const std::vector<CheckResult>& results);
std::string format_text(const std::vector<CheckResult>& results);

}  // namespace boolos
