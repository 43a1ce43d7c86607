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

#include "eps/sidechain/state.hpp"

#include "eps/crypto/keccak.hpp"

namespace eps::sidechain {
namespace {

Bytes encode_store(const Store& store) {
  KvMap kv;
  for (const auto& [k, v] : store) kv.emplace(to_bytes(k), to_bytes(v));
  return encode_kv(kv);
}

Store& existing(SidechainState& s, const std::string& name) {
  auto it = s.contracts.find(name);
  if (it == s.contracts.end()) fail(ErrorCode::unknown_contract, "no contract '" + name + "'");
  return it->second;
}

}  // namespace

Bytes SidechainState::serialize() const {
  KvMap kv;
  for (const auto& [name, store] : contracts) kv.emplace(to_bytes(name), encode_store(store));
  return encode_kv(kv);
}

Digest256 SidechainState::root() const { return keccak256(serialize()); }

Bytes SidechainState::encode() const {
  ByteWriter w;
  w.u64(block_number).raw(serialize());
  return w.take();
}

SidechainState SidechainState::decode(ByteView data) {
  ByteReader r(data);
  SidechainState s;
  s.block_number = r.u64();
  for (const auto& [name, image] : decode_kv(r.rest())) {
    Store store;
    for (const auto& [k, v] : decode_kv(image)) store.emplace(eps::to_string(k), eps::to_string(v));
    s.contracts.emplace(eps::to_string(name), std::move(store));
  }
  return s;
}

std::optional<std::string> SidechainState::get(std::string_view contract, std::string_view key) const {
  auto c = contracts.find(std::string(contract));
  if (c == contracts.end()) return std::nullopt;
  auto v = c->second.find(std::string(key));
  if (v == c->second.end()) return std::nullopt;
  return v->second;
}

std::string_view to_string(TxOp op) {
  switch (op) {
    case TxOp::deploy: return "deploy";
    case TxOp::put: return "put";
    case TxOp::guarded_put: return "guarded-put";
    case TxOp::anchored_put: return "anchored-put";
  }
  return "?";
}

Bytes SidechainTx::encode() const {
  ByteWriter w;
  w.blob(origin).u64(seq).fixed(sender).u8(static_cast<std::uint8_t>(op)).blob(contract);
  w.u32(static_cast<std::uint32_t>(pairs.size()));
  for (const auto& [k, v] : pairs) w.blob(k).blob(v);
  w.blob(key).blob(value).blob(expected).u8(anchor ? 1 : 0);
  if (anchor) w.fixed(anchor->target).u64(anchor->block).blob(anchor->contract).blob(anchor->key);
  return w.take();
}

Digest256 SidechainTx::hash() const { return keccak256(encode()); }

SidechainReceipt apply_sidechain_tx(SidechainState& state, const SidechainTx& tx, const AnchorResolver& resolver) {
  SidechainReceipt receipt;
  receipt.tx_hash = tx.hash();
  try {
    switch (tx.op) {
      case TxOp::deploy: {
        if (state.contracts.contains(tx.contract)) {
          fail(ErrorCode::contract_exists, "contract '" + tx.contract + "' exists");
        }
        Store store(tx.pairs.begin(), tx.pairs.end());
        state.contracts.emplace(tx.contract, std::move(store));
        break;
      }
      case TxOp::put:
        existing(state, tx.contract)[tx.key] = tx.value;
        break;
      case TxOp::guarded_put: {
        auto& store = existing(state, tx.contract);
        auto it = store.find(tx.key);
        std::string current = it == store.end() ? std::string() : it->second;
        if (current != tx.expected) {
          fail(ErrorCode::guard_failed, tx.contract + "/" + tx.key + " is '" + current + "', expected '" +
                                            tx.expected + "'");
        }
        store[tx.key] = tx.value;
        break;
      }
      case TxOp::anchored_put: {
        if (!tx.anchor || !resolver) fail(ErrorCode::bad_arguments, "anchored put without an anchor");
        auto& store = existing(state, tx.contract);
        auto seen = resolver(*tx.anchor);
        store[tx.key] = std::move(seen);
        break;
      }
    }
    receipt.ok = true;
  } catch (const Error& e) {
    receipt.error = e.code();
    receipt.reason = e.what();
  }
  return receipt;
}

}  // namespace eps::sidechain
