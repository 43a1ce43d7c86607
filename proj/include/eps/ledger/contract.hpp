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
#include <memory>
#include <optional>
#include <span>
#include <string_view>

#include "eps/codec/kv.hpp"
#include "eps/crypto/bytes.hpp"

namespace eps {

using ContractId = Digest256;

enum class ContractKind : std::uint8_t { root_era = 1, delegate_era = 2, orginfo = 3, mgmt_pinning = 4 };

std::string_view to_string(ContractKind kind);
std::optional<ContractKind> parse_contract_kind(std::string_view name);

struct CallContext {
  Address sender;
  std::uint64_t block_number = 0;
};

/// A deterministic state machine hosted on the management ledger.
///
/// `call` mutates; any eps::Error it throws is a revert, and the ledger
/// restores the pre-call state from a clone. `query` is a pure read. `encode`
/// returns the canonical key-value image, which must include the kind under
/// the key "kind" so snapshots can be decoded.
class Contract {
 public:
  virtual ~Contract() = default;

  virtual ContractKind kind() const = 0;
  virtual Bytes call(const CallContext& ctx, std::string_view name, std::span<const Bytes> args) = 0;
  virtual Bytes query(std::string_view name, std::span<const Bytes> args) const = 0;
  virtual KvMap encode() const = 0;
  virtual std::unique_ptr<Contract> clone() const = 0;
};

/// Most calls take a single fixed-layout argument blob.
const Bytes& single_arg(std::span<const Bytes> args, std::string_view call);

}  // namespace eps
