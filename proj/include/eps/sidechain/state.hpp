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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eps/codec/kv.hpp"
#include "eps/error.hpp"
#include "eps/sidechain/policy.hpp"

namespace eps::sidechain {

using Store = std::map<std::string, std::string>;

/// Named key-value contracts. The root covers contract contents only, so
/// an empty block leaves it unchanged.
struct SidechainState {
  std::map<std::string, Store> contracts;
  std::uint64_t block_number = 0;

  /// encode_kv({name -> encode_kv(pairs)})
  Bytes serialize() const;
  Digest256 root() const;

  /// u64 block number ++ serialize(); the persisted plaintext.
  Bytes encode() const;
  static SidechainState decode(ByteView data);

  std::optional<std::string> get(std::string_view contract, std::string_view key) const;
};

enum class TxOp : std::uint8_t { deploy = 1, put = 2, guarded_put = 3, anchored_put = 4 };
std::string_view to_string(TxOp op);

/// A read of another sidechain pinned to one of its block numbers.
struct AnchoredRead {
  Digest256 target;
  std::uint64_t block = 0;
  std::string contract;
  std::string key;
};

struct SidechainTx {
  std::string origin;  // submitting node
  std::uint64_t seq = 0;
  Address sender;
  TxOp op = TxOp::put;
  std::string contract;
  std::vector<std::pair<std::string, std::string>> pairs;  // deploy: initial pairs
  std::string key;
  std::string value;
  std::string expected;  // guarded-put
  std::optional<AnchoredRead> anchor;

  Bytes encode() const;
  Digest256 hash() const;
  TxType tx_type() const { return op == TxOp::deploy ? TxType::deploy : TxType::update; }
};

struct SidechainReceipt {
  Digest256 tx_hash;
  bool ok = false;
  std::optional<ErrorCode> error;
  std::string reason;
};

/// Returns the value seen by an anchored read; throws to revert the tx.
using AnchorResolver = std::function<std::string(const AnchoredRead&)>;

/// Applies one tx in place. On failure the state is untouched and the
/// receipt carries unknown-contract, contract-exists or guard-failed.
SidechainReceipt apply_sidechain_tx(SidechainState& state, const SidechainTx& tx,
                                    const AnchorResolver& resolver = {});

}  // namespace eps::sidechain
