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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eps/conformance/catalogue.hpp"

namespace eps::conformance {

/// Test id -> passed.
using TestResults = std::map<std::string, bool>;

enum class Mark : std::uint8_t { pass, fail, not_applicable };

struct ReportRow {
  RequirementEntry entry;
  Mark mark = Mark::not_applicable;
  /// Result per named test; nullopt when the test did not run.
  std::vector<std::pair<std::string, std::optional<bool>>> tests;

  /// "✓", "✓ partially", "✗" or "N/A".
  std::string mark_text() const;
};

struct Report {
  std::vector<ReportRow> rows;

  const ReportRow* row(std::string_view id) const;
  /// One table per family (BC, SC, EE). No timestamps or host data.
  std::string text() const;
  /// One record per requirement, pretty-printed.
  std::string json() const;
};

/// Validates the registry first. A claimed row is ✓ only if every named
/// test ran and passed; out-of-scope rows are N/A.
Report emit_conformance_report(const Registry& registry, const TestResults& results);

/// Writes report.txt and report.json into `dir`.
void write_report(const Report& report, const std::filesystem::path& dir);

}  // namespace eps::conformance
