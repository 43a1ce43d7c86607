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

#include "eps/mgmt/contracts.hpp"

#include <algorithm>

#include "eps/era/contracts.hpp"
#include "eps/io.hpp"
#include "eps/pinning/pinning.hpp"

namespace eps::mgmt {
namespace {

constexpr std::string_view kSnapshotMagic = "EPSL";

Address owner_from(ByteView init_args, const Address& deployer) {
  if (init_args.empty()) return deployer;
  if (init_args.size() != Address::kSize) fail(ErrorCode::bad_arguments, "owner must be 20 bytes");
  return Address::from_view(init_args);
}

}  // namespace

ContractId deploy_contract(Ledger& ledger, std::string_view kind, ByteView init_args, const Address& deployer) {
  auto parsed = parse_contract_kind(kind);
  if (!parsed) fail(ErrorCode::unsupported_contract, "unsupported contract kind '" + std::string(kind) + "'");
  std::unique_ptr<Contract> c;
  switch (*parsed) {
    case ContractKind::root_era:
    case ContractKind::delegate_era:
      c = std::make_unique<era::EraContract>(*parsed, owner_from(init_args, deployer));
      break;
    case ContractKind::orginfo:
      c = std::make_unique<era::OrgInfoContract>(owner_from(init_args, deployer));
      break;
    case ContractKind::mgmt_pinning:
      if (!init_args.empty()) fail(ErrorCode::bad_arguments, "mgmt-pinning takes no init args");
      c = std::make_unique<pinning::PinningContract>();
      break;
  }
  return ledger.deploy(std::move(c), deployer);
}

std::unique_ptr<Contract> decode_contract(const KvMap& image) {
  auto it = image.find(kv_key("kind"));
  if (it == image.end() || it->second.size() != 1) fail(ErrorCode::malformed_snapshot, "contract image has no kind");
  switch (static_cast<ContractKind>(it->second[0])) {
    case ContractKind::root_era:
    case ContractKind::delegate_era:
      return era::EraContract::decode(image);
    case ContractKind::orginfo:
      return era::OrgInfoContract::decode(image);
    case ContractKind::mgmt_pinning:
      return pinning::PinningContract::decode(image);
  }
  fail(ErrorCode::malformed_snapshot, "unknown contract kind byte " + std::to_string(it->second[0]));
}

Bytes save_snapshot(const WorldState& state) {
  ByteWriter w;
  w.raw(kSnapshotMagic).u16(kSnapshotVersion).raw(state.serialize());
  return w.take();
}

WorldState load_snapshot(ByteView data) {
  try {
    ByteReader r(data);
    if (to_string(r.raw(4)) != kSnapshotMagic) fail(ErrorCode::malformed_snapshot, "bad magic");
    if (auto v = r.u16(); v != kSnapshotVersion) {
      fail(ErrorCode::malformed_snapshot, "unsupported snapshot version " + std::to_string(v));
    }
    WorldState state;
    for (const auto& [id, image] : decode_kv(r.rest())) {
      state.insert(ContractId::from_view(id), decode_contract(decode_kv(image)));
    }
    return state;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::malformed_snapshot) throw;
    fail(ErrorCode::malformed_snapshot, e.what());
  }
}

void write_snapshot_file(const std::filesystem::path& path, const WorldState& state) {
  write_file(path, save_snapshot(state));
}

WorldState read_snapshot_file(const std::filesystem::path& path) { return load_snapshot(read_file(path)); }

}  // namespace eps::mgmt
