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

#include "eps/ledger/ledger.hpp"

#include "eps/crypto/keccak.hpp"

namespace eps {

Bytes Transaction::encode() const {
  ByteWriter w;
  w.fixed(sender).fixed(target).blob(call).u32(static_cast<std::uint32_t>(args.size()));
  for (const auto& a : args) w.blob(a);
  w.u64(nonce);
  return w.take();
}

Digest256 Transaction::hash() const { return keccak256(encode()); }

Digest256 Block::hash() const {
  ByteWriter w;
  w.u64(number).fixed(parent_hash).fixed(state_root).u32(static_cast<std::uint32_t>(txs.size()));
  for (std::size_t i = 0; i < txs.size(); ++i) {
    w.fixed(txs[i].hash()).u8(static_cast<std::uint8_t>(receipts[i].status));
  }
  return keccak256(w.bytes());
}

Ledger::Ledger() {
  Block genesis;
  genesis.number = 0;
  genesis.state_root = state_.root();
  blocks_.push_back(std::move(genesis));
}

ContractId Ledger::deploy(std::unique_ptr<Contract> contract, const Address& deployer) {
  auto& counter = deploy_counters_[deployer];
  auto id = keccak256_concat({deployer.view(), be64(counter)});
  ++counter;
  state_.insert(id, std::move(contract));
  return id;
}

std::uint64_t Ledger::executed_nonce(const Address& sender) const {
  auto it = executed_nonces_.find(sender);
  return it == executed_nonces_.end() ? 0 : it->second;
}

std::uint64_t Ledger::next_nonce(const Address& sender) const {
  auto it = queued_.find(sender);
  return executed_nonce(sender) + (it == queued_.end() ? 0 : it->second);
}

TxReceipt Ledger::submit(Transaction tx) {
  auto expected = next_nonce(tx.sender);
  if (tx.nonce != expected) {
    fail(ErrorCode::nonce_gap, "sender " + tx.sender.hex() + " expected nonce " +
                                   std::to_string(expected) + ", got " + std::to_string(tx.nonce));
  }
  if (!state_.contains(tx.target)) fail(ErrorCode::unknown_target, "no contract at " + tx.target.hex());

  TxReceipt receipt;
  receipt.tx_hash = tx.hash();
  ++queued_[tx.sender];
  pool_.push_back(std::move(tx));
  return receipt;
}

const Block& Ledger::produce_block() {
  Block block;
  block.number = head().number + 1;
  block.parent_hash = head().hash();

  while (!pool_.empty()) {
    Transaction tx = std::move(pool_.front());
    pool_.pop_front();
    if (--queued_[tx.sender] == 0) queued_.erase(tx.sender);
    ++executed_nonces_[tx.sender];

    TxReceipt receipt;
    receipt.tx_hash = tx.hash();
    receipt.block_number = block.number;

    Contract* target = state_.find_mutable(tx.target);
    auto saved = target->clone();
    try {
      receipt.output = target->call(CallContext{tx.sender, block.number}, tx.call, tx.args);
      receipt.status = TxStatus::success;
    } catch (const Error& e) {
      state_.insert(tx.target, std::move(saved));
      receipt.status = TxStatus::reverted;
      receipt.revert_code = e.code();
      receipt.revert_reason = e.what();
    }
    receipts_[receipt.tx_hash] = receipt;
    block.receipts.push_back(std::move(receipt));
    block.txs.push_back(std::move(tx));
  }

  block.state_root = state_.root();
  blocks_.push_back(std::move(block));
  return blocks_.back();
}

TxReceipt Ledger::execute(const Address& sender, const ContractId& target, std::string call,
                          std::vector<Bytes> args) {
  Transaction tx{sender, target, std::move(call), std::move(args), next_nonce(sender)};
  auto hash = submit(std::move(tx)).tx_hash;
  produce_block();
  return receipts_.at(hash);
}

std::optional<TxReceipt> Ledger::receipt(const Digest256& tx_hash) const {
  auto it = receipts_.find(tx_hash);
  if (it == receipts_.end()) return std::nullopt;
  return it->second;
}

}  // namespace eps
