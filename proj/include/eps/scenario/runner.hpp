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
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "eps/netsim/network.hpp"
#include "eps/scenario/script.hpp"

namespace eps::scenario {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitParse = 2;

struct RunOptions {
  std::filesystem::path out_dir;
  std::uint64_t seed = 0;
  /// Run the self-checks and write report.txt / report.json.
  bool write_report = true;
};

struct RunResult {
  int exit_code = kExitOk;
  /// Empty on success; otherwise "line N: ..." or the error text.
  std::string message;
  Digest256 mgmt_root;
  std::vector<std::string> trace;
};

/// Executes the script against a fresh network seeded from options.seed.
/// Writes into out_dir:
///   trace.log       one delivered message per line
///   roots.txt       management root, then each sidechain's id, head, root
///   sidechains.txt  alias, id and secret hex per sidechain
///   mgmt.epsl       management world-state snapshot
///   report.txt/json conformance report (when write_report)
/// Files are written even when an assertion fails.
RunResult run_scenario(const ScenarioScript& script, const RunOptions& options);

/// Parse and run; parse and invalid-domain errors give kExitParse.
RunResult run_scenario_file(const std::filesystem::path& path, const RunOptions& options);

/// Declarations only (org, node, era-*, orginfo, trust): builds the
/// registries for era-resolve. Any action statement is a parse error.
struct EraFixture {
  netsim::SimNetwork net;
  /// Contract id -> "root:<label>" or "delegate:<org>".
  std::map<ContractId, std::string> labels;
};
EraFixture load_era_fixture(const std::filesystem::path& path);

/// name=value lines with provenance, or NOT FOUND lines.
std::string format_resolution(const EraFixture& fixture, const era::ResolvedBootstrap& result,
                              const std::vector<std::string>& names);

}  // namespace eps::scenario
