// Copyright 2026 The EPS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "eps/conformance/report.hpp"

namespace eps::conformance {

/// A named behavioural check. `run` throws eps::Error on failure; files it
/// writes go under `work_dir`.
struct SelfCheck {
  std::string id;
  std::function<void(const std::filesystem::path& work_dir)> run;
};

/// One check per test id named in default_registry().
const std::vector<SelfCheck>& selfchecks();

struct SelfCheckOutcome {
  TestResults results;
  /// "id: message" for each failed check, in run order.
  std::vector<std::string> failures;
};

SelfCheckOutcome run_selfchecks(const std::filesystem::path& work_dir);

}  // namespace eps::conformance
