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
#include <memory>
#include <string_view>

#include "eps/ledger/ledger.hpp"

namespace eps::mgmt {

/// Deploys one of "root-era", "delegate-era", "orginfo", "mgmt-pinning".
/// ERA and OrgInfo contracts take an optional 20-byte owner as init args
/// (default: the deployer); the pinning contract takes none. Anything else
/// is unsupported-contract.
ContractId deploy_contract(Ledger& ledger, std::string_view kind, ByteView init_args, const Address& deployer);

/// Rebuilds a contract from its canonical key-value image.
std::unique_ptr<Contract> decode_contract(const KvMap& image);

inline constexpr std::uint16_t kSnapshotVersion = 1;

/// "EPSL" ++ u16be version ++ canonical world-state serialization.
Bytes save_snapshot(const WorldState& state);
/// Throws malformed-snapshot.
WorldState load_snapshot(ByteView data);

void write_snapshot_file(const std::filesystem::path& path, const WorldState& state);
WorldState read_snapshot_file(const std::filesystem::path& path);

}  // namespace eps::mgmt
