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

#include <map>
#include <memory>
#include <span>
#include <string_view>

#include "eps/ledger/contract.hpp"

namespace eps {

/// The set of deployed contracts. Doubles as the read-only view handed to
/// resolvers and verifiers, whether it lives inside a Ledger or was loaded
/// from a snapshot file.
class WorldState {
 public:
  WorldState() = default;
  WorldState(WorldState&&) noexcept = default;
  WorldState& operator=(WorldState&&) noexcept = default;
  WorldState(const WorldState& other);
  WorldState& operator=(const WorldState& other);

  void insert(const ContractId& id, std::unique_ptr<Contract> contract);

  bool contains(const ContractId& id) const { return contracts_.contains(id); }
  const Contract* find(const ContractId& id) const;
  Contract* find_mutable(const ContractId& id);

  /// Typed access; throws unknown-target if absent or of another type.
  template <typename T>
  const T& as(const ContractId& id) const {
    auto* c = dynamic_cast<const T*>(find(id));
    if (c == nullptr) fail(ErrorCode::unknown_target, "no contract of the requested kind at " + id.hex());
    return *c;
  }

  /// Pure read; throws unknown-target.
  Bytes read_contract(const ContractId& id, std::string_view query, std::span<const Bytes> args = {}) const;

  /// encode_kv over { contract id -> encode_kv(contract image) }.
  Bytes serialize() const;
  Digest256 root() const;

  const std::map<ContractId, std::unique_ptr<Contract>>& contracts() const { return contracts_; }

 private:
  std::map<ContractId, std::unique_ptr<Contract>> contracts_;
};

}  // namespace eps
