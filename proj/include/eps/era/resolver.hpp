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

#include <optional>
#include <string>
#include <vector>

#include "eps/era/contracts.hpp"
#include "eps/era/domain.hpp"
#include "eps/ledger/world_state.hpp"

namespace eps::era {

inline constexpr int kMaxDelegateDepth = 8;

/// Where an OrgInfo contract was found: the trusted root, the delegate ERAs
/// walked from it (in order), and the suffix domain whose record matched.
struct Provenance {
  ContractId root;
  std::vector<ContractId> delegates;
  ContractId org_info;
  std::string matched_domain;
};

struct ResolvedEntry {
  std::string name;
  Bytes value;
  Provenance provenance;
};

struct ResolvedBootstrap {
  DomainName domain;
  /// One entry per (name, root) hit, roots in trust order.
  std::vector<ResolvedEntry> entries;
  /// One per root that led to an OrgInfo contract.
  std::vector<Provenance> sources;
  std::vector<std::string> diagnostics;

  bool found() const { return !sources.empty(); }
  std::vector<const ResolvedEntry*> lookup(std::string_view name) const;
  /// Value from the first trusted root that has one.
  std::optional<Bytes> first(std::string_view name) const;
};

/// Resolves `names` for `domain` against each trusted root in turn. Throws
/// configuration if `roots` is empty; an unknown domain is a not-found
/// result, not an error.
ResolvedBootstrap resolve(const std::vector<ContractId>& roots, const DomainName& domain,
                          const std::vector<std::string>& names, const WorldState& state);

}  // namespace eps::era
