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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace eps::conformance {

enum class Level : std::uint8_t { must, must_not, should, should_not, may };
enum class Status : std::uint8_t { covered, out_of_scope, partial };

std::string_view to_string(Level l);
std::string_view to_string(Status s);

/// "EE", "BC" or "SC", read from the id prefix. BC1c is written without
/// the dash in the source requirement list and is kept verbatim.
std::string_view family(std::string_view id);

struct CatalogueId {
  std::string_view id;
  Level level;
};

/// Every requirement identifier in the source requirement list, in order:
/// 96 EE, 12 BC and 15 SC ids.
const std::vector<CatalogueId>& catalogue_ids();

struct RequirementEntry {
  std::string id;
  Level level = Level::must;
  Status status = Status::out_of_scope;
  std::vector<std::string> test_ids;
  std::string rationale;
};

using Registry = std::vector<RequirementEntry>;

/// What this artifact claims for each catalogued id.
Registry default_registry();

/// Throws missing-requirement if a catalogued id has no entry (or more than
/// one), and configuration if an out-of-scope or partial entry has no
/// rationale or a claimed entry names no tests.
void validate_registry(const Registry& registry);

}  // namespace eps::conformance
