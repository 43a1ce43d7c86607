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

#include "eps/era/resolver.hpp"

namespace eps::era {
namespace {

struct Walk {
  const WorldState& state;
  const DomainName& domain;
  std::vector<std::string>& diagnostics;

  std::optional<Provenance> in(const ContractId& era_id, std::vector<ContractId> path, int depth) {
    if (depth > kMaxDelegateDepth) {
      diagnostics.push_back("delegate depth cap reached at " + era_id.hex());
      return std::nullopt;
    }
    auto* era = dynamic_cast<const EraContract*>(state.find(era_id));
    if (era == nullptr) {
      diagnostics.push_back("no ERA at " + era_id.hex());
      return std::nullopt;
    }
    for (const auto& suffix : domain.suffixes()) {
      auto rec = era->get_record(domain_hash(suffix));
      if (!rec) continue;
      if (rec->delegate_era) {
        auto next = path;
        next.push_back(*rec->delegate_era);
        if (auto hit = in(*rec->delegate_era, std::move(next), depth + 1)) return hit;
      }
      if (rec->org_info) return Provenance{{}, std::move(path), *rec->org_info, suffix.text()};
      return std::nullopt;
    }
    return std::nullopt;
  }
};

}  // namespace

std::vector<const ResolvedEntry*> ResolvedBootstrap::lookup(std::string_view name) const {
  std::vector<const ResolvedEntry*> out;
  for (const auto& e : entries) {
    if (e.name == name) out.push_back(&e);
  }
  return out;
}

std::optional<Bytes> ResolvedBootstrap::first(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return e.value;
  }
  return std::nullopt;
}

ResolvedBootstrap resolve(const std::vector<ContractId>& roots, const DomainName& domain,
                          const std::vector<std::string>& names, const WorldState& state) {
  if (roots.empty()) fail(ErrorCode::configuration, "no trusted root ERA configured");
  ResolvedBootstrap out{domain, {}, {}, {}};
  Walk walk{state, domain, out.diagnostics};
  for (const auto& root : roots) {
    auto prov = walk.in(root, {}, 0);
    if (!prov) continue;
    prov->root = root;
    auto* info = dynamic_cast<const OrgInfoContract*>(state.find(prov->org_info));
    if (info == nullptr) {
      out.diagnostics.push_back("record for " + prov->matched_domain + " names missing OrgInfo " +
                                prov->org_info.hex());
      continue;
    }
    for (const auto& name : names) {
      if (auto v = info->get(orginfo_name_key(name))) out.entries.push_back({name, *v, *prov});
    }
    out.sources.push_back(std::move(*prov));
  }
  return out;
}

}  // namespace eps::era
