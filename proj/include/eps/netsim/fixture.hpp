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

#include <string>
#include <vector>

#include "eps/netsim/network.hpp"

namespace eps::netsim {

struct FixtureNode {
  std::string id;
  NodeMode mode = NodeMode::plaintext;
};

struct FixtureOrg {
  std::string domain;
  std::vector<FixtureNode> nodes;
};

struct FixtureOptions {
  std::uint64_t seed = 0;
  pinning::VotingConfig voting;
  /// Every node accepts establishment from every fixture org and node, and
  /// whitelists every fixture org address (for cross-chain reads).
  bool mutual_trust = true;
};

/// A network with one trusted root ERA labelled "root" listing each org's
/// OrgInfo, whose enode value names the org's nodes.
SimNetwork make_fixture(const std::vector<FixtureOrg>& orgs, const FixtureOptions& options = {});

}  // namespace eps::netsim
