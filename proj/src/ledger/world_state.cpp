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

#include "eps/ledger/world_state.hpp"

#include "eps/crypto/keccak.hpp"

namespace eps {

std::string_view to_string(ContractKind kind) {
  switch (kind) {
    case ContractKind::root_era: return "root-era";
    case ContractKind::delegate_era: return "delegate-era";
    case ContractKind::orginfo: return "orginfo";
    case ContractKind::mgmt_pinning: return "mgmt-pinning";
  }
  return "unknown";
}

std::optional<ContractKind> parse_contract_kind(std::string_view name) {
  for (auto k : {ContractKind::root_era, ContractKind::delegate_era, ContractKind::orginfo,
                 ContractKind::mgmt_pinning}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

const Bytes& single_arg(std::span<const Bytes> args, std::string_view call) {
  if (args.size() != 1) {
    fail(ErrorCode::bad_arguments, std::string(call) + " takes one argument blob, got " +
                                       std::to_string(args.size()));
  }
  return args[0];
}

WorldState::WorldState(const WorldState& other) {
  for (const auto& [id, c] : other.contracts_) contracts_.emplace(id, c->clone());
}

WorldState& WorldState::operator=(const WorldState& other) {
  if (this != &other) {
    WorldState copy(other);
    *this = std::move(copy);
  }
  return *this;
}

void WorldState::insert(const ContractId& id, std::unique_ptr<Contract> contract) {
  contracts_[id] = std::move(contract);
}

const Contract* WorldState::find(const ContractId& id) const {
  auto it = contracts_.find(id);
  return it == contracts_.end() ? nullptr : it->second.get();
}

Contract* WorldState::find_mutable(const ContractId& id) {
  auto it = contracts_.find(id);
  return it == contracts_.end() ? nullptr : it->second.get();
}

Bytes WorldState::read_contract(const ContractId& id, std::string_view query,
                                std::span<const Bytes> args) const {
  const auto* c = find(id);
  if (c == nullptr) fail(ErrorCode::unknown_target, "no contract at " + id.hex());
  return c->query(query, args);
}

Bytes WorldState::serialize() const {
  KvMap outer;
  for (const auto& [id, c] : contracts_) outer.emplace(id.to_vector(), encode_kv(c->encode()));
  return encode_kv(outer);
}

Digest256 WorldState::root() const { return keccak256(serialize()); }

}  // namespace eps
