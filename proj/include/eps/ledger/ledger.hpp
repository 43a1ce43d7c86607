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
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eps/ledger/world_state.hpp"

namespace eps {

struct Transaction {
  Address sender;
  ContractId target;
  std::string call;
  std::vector<Bytes> args;
  std::uint64_t nonce = 0;

  Bytes encode() const;
  Digest256 hash() const;
};

enum class TxStatus : std::uint8_t { pending = 0, success = 1, reverted = 2 };

struct TxReceipt {
  Digest256 tx_hash;
  TxStatus status = TxStatus::pending;
  std::uint64_t block_number = 0;
  Bytes output;
  std::optional<ErrorCode> revert_code;
  std::string revert_reason;

  bool ok() const { return status == TxStatus::success; }
};

struct Block {
  std::uint64_t number = 0;
  Digest256 parent_hash;
  std::vector<Transaction> txs;
  std::vector<TxReceipt> receipts;
  Digest256 state_root;

  Digest256 hash() const;
};

/// The management chain: an append-only block sequence that executes queued
/// transactions against contract state machines. Blocks are produced only
/// when the owner asks. No gas, no signatures; `sender` is trusted.
///
/// Single-writer. Const member functions may run concurrently with each
/// other but not with a mutation.
class Ledger {
 public:
  Ledger();

  Ledger(Ledger&&) noexcept = default;
  Ledger& operator=(Ledger&&) noexcept = default;

  /// Registers a contract immediately. id = keccak256(deployer ++
  /// be64(deployer's deployment counter)).
  ContractId deploy(std::unique_ptr<Contract> contract, const Address& deployer);

  /// Queues a transaction. Throws nonce-gap unless tx.nonce is exactly the
  /// next nonce for the sender (executed plus queued), unknown-target if the
  /// target is not deployed.
  TxReceipt submit(Transaction tx);

  /// Executes the pending pool in FIFO order and appends a block. Reverted
  /// transactions are included with their state changes rolled back.
  const Block& produce_block();

  /// Convenience: submit with the sender's next nonce, produce a block, and
  /// return the receipt.
  TxReceipt execute(const Address& sender, const ContractId& target, std::string call,
                    std::vector<Bytes> args);

  std::uint64_t next_nonce(const Address& sender) const;
  std::uint64_t executed_nonce(const Address& sender) const;

  Bytes read_contract(const ContractId& id, std::string_view query, std::span<const Bytes> args = {}) const {
    return state_.read_contract(id, query, args);
  }

  const WorldState& state() const { return state_; }
  const Block& head() const { return blocks_.back(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t pending_count() const { return pool_.size(); }
  std::optional<TxReceipt> receipt(const Digest256& tx_hash) const;

 private:
  WorldState state_;
  std::vector<Block> blocks_;
  std::deque<Transaction> pool_;
  std::map<Address, std::uint64_t> executed_nonces_;
  std::map<Address, std::uint64_t> queued_;
  std::map<Address, std::uint64_t> deploy_counters_;
  std::map<Digest256, TxReceipt> receipts_;
};

}  // namespace eps
