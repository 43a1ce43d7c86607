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

#include "eps/sidechain/node.hpp"

#include <algorithm>

#include "eps/io.hpp"
#include "eps/sidechain/persist.hpp"

namespace eps::sidechain {

SidechainNode::SidechainNode(std::string id, std::string org, NodeMode mode, PermissionPolicy policy)
    : id_(std::move(id)), org_(std::move(org)), mode_(mode), policy_(std::move(policy)) {}

void SidechainNode::authorize(std::string_view participant, ApiClass c) {
  ++audit_count_;
  if (!check_api_permission(policy_, participant, c)) {
    fail(ErrorCode::permission_denied,
         std::string(participant) + " lacks " + std::string(to_string(c)) + " on node " + id_);
  }
}

SidechainRuntime& SidechainNode::runtime(const Digest256& sidechain) {
  auto it = runtimes_.find(sidechain);
  if (it == runtimes_.end()) fail(ErrorCode::unknown_sidechain, "node " + id_ + " is not in " + sidechain.hex());
  return it->second;
}

const SidechainRuntime& SidechainNode::runtime(const Digest256& sidechain) const {
  auto it = runtimes_.find(sidechain);
  if (it == runtimes_.end()) fail(ErrorCode::unknown_sidechain, "node " + id_ + " is not in " + sidechain.hex());
  return it->second;
}

SidechainRuntime& SidechainNode::live(const Digest256& sidechain) {
  auto& rt = runtime(sidechain);
  if (rt.archived) fail(ErrorCode::sidechain_archived, "sidechain " + sidechain.hex() + " is archived");
  return rt;
}

SidechainTx SidechainNode::submit_tx(std::string_view participant, const Digest256& sidechain, SidechainTx tx) {
  authorize(participant, tx.op == TxOp::deploy ? ApiClass::deploy : ApiClass::transact);
  if (!check_tx_permission(policy_, tx.sender, tx.tx_type())) {
    fail(ErrorCode::permission_denied,
         "account " + tx.sender.hex() + " may not submit " + std::string(to_string(tx.tx_type())) + " transactions");
  }
  auto& rt = live(sidechain);
  tx.origin = id_;
  tx.seq = next_seq_++;
  rt.mempool.push_back(tx);
  return tx;
}

std::optional<std::string> SidechainNode::read(std::string_view participant, const Digest256& sidechain,
                                               std::string_view contract, std::string_view key,
                                               std::optional<std::uint64_t> block) {
  authorize(participant, ApiClass::view);
  auto& rt = live(sidechain);
  if (mode_ == NodeMode::ciphertext_only) {
    fail(ErrorCode::permission_denied, "node " + id_ + " holds ciphertext only");
  }
  auto it = rt.history.find(block.value_or(rt.head));
  if (it == rt.history.end()) return std::nullopt;
  return it->second.get(contract, key);
}

void SidechainNode::archive(std::string_view participant, const Digest256& sidechain,
                            const std::filesystem::path& path) {
  authorize(participant, ApiClass::admin);
  auto& rt = live(sidechain);
  if (!rt.mempool.empty()) {
    fail(ErrorCode::pending_transactions, std::to_string(rt.mempool.size()) + " transactions pending");
  }
  if (mode_ == NodeMode::plaintext) {
    if (!rt.key) fail(ErrorCode::configuration, "no state key for " + sidechain.hex());
    persist_state(rt.history.at(rt.head), *rt.key, path);
  } else {
    auto it = rt.sealed.find(rt.head);
    if (it == rt.sealed.end()) fail(ErrorCode::configuration, "no sealed state at head");
    write_file(path, it->second);
  }
  rt.history.clear();
  rt.sealed.clear();
  rt.archived = true;
}

void SidechainNode::restore(std::string_view participant, const Digest256& sidechain,
                            const std::filesystem::path& path) {
  authorize(participant, ApiClass::admin);
  auto& rt = runtime(sidechain);
  auto blob = read_file(path);
  if (mode_ == NodeMode::plaintext) {
    if (!rt.key) fail(ErrorCode::configuration, "no state key for " + sidechain.hex());
    auto state = open_state(blob, *rt.key);
    rt.head = state.block_number;
    rt.history.clear();
    rt.history.emplace(rt.head, std::move(state));
  } else {
    if (peek_state_header(blob).sidechain_id != sidechain) {
      fail(ErrorCode::wrong_sidechain, "archive belongs to another sidechain");
    }
  }
  rt.sealed.clear();
  rt.sealed.emplace(rt.head, std::move(blob));
  rt.archived = false;
}

void SidechainNode::authorize_admin(std::string_view participant) { authorize(participant, ApiClass::admin); }

SidechainRuntime& SidechainNode::join(const Digest256& sidechain, const std::set<std::string>& member_domains) {
  auto [it, fresh] = runtimes_.try_emplace(sidechain);
  auto& rt = it->second;
  if (fresh) {
    rt.id = sidechain;
    rt.member_domains = member_domains;
    if (mode_ == NodeMode::plaintext) rt.history.emplace(0, SidechainState{});
  }
  return rt;
}

void SidechainNode::install_secret(const Digest256& sidechain, ByteView secret, std::optional<ByteView> root_key) {
  auto& rt = runtime(sidechain);
  rt.secret = Bytes(secret.begin(), secret.end());
  if (mode_ == NodeMode::plaintext && root_key) {
    rt.key = derive_sidechain_key(*root_key, sidechain);
    for (const auto& [n, state] : rt.history) rt.sealed[n] = seal_state(state, *rt.key);
  }
}

void SidechainNode::receive_tx(const Digest256& sidechain, const SidechainTx& tx) {
  auto& rt = runtime(sidechain);
  auto h = tx.hash();
  bool seen = std::any_of(rt.mempool.begin(), rt.mempool.end(), [&](const SidechainTx& t) { return t.hash() == h; });
  if (!seen) rt.mempool.push_back(tx);
}

std::vector<SidechainTx> SidechainNode::take_mempool(const Digest256& sidechain) {
  auto& rt = live(sidechain);
  std::vector<SidechainTx> out(rt.mempool.begin(), rt.mempool.end());
  rt.mempool.clear();
  return out;
}

AppliedBlock SidechainNode::apply_block(const Digest256& sidechain, const std::vector<SidechainTx>& txs,
                                        const AnchorResolver& resolver) {
  if (mode_ != NodeMode::plaintext) fail(ErrorCode::configuration, "ciphertext-only node cannot execute");
  auto& rt = live(sidechain);
  if (!rt.key) fail(ErrorCode::configuration, "no state key for " + sidechain.hex());

  AppliedBlock out;
  SidechainState next = rt.history.at(rt.head);
  next.block_number = rt.head + 1;
  for (const auto& tx : txs) {
    out.receipts.push_back(apply_sidechain_tx(next, tx, resolver));
    auto h = tx.hash();
    std::erase_if(rt.mempool, [&](const SidechainTx& t) { return t.hash() == h; });
  }
  out.number = next.block_number;
  out.root = next.root();
  out.sealed = seal_state(next, *rt.key);
  rt.head = out.number;
  rt.sealed[out.number] = out.sealed;
  rt.history.emplace(out.number, std::move(next));
  return out;
}

void SidechainNode::accept_sealed(const Digest256& sidechain, std::uint64_t number, Bytes sealed) {
  auto& rt = live(sidechain);
  rt.sealed[number] = std::move(sealed);
  rt.head = std::max(rt.head, number);
}

std::optional<SidechainState> SidechainNode::state_at(const Digest256& sidechain, std::uint64_t block) const {
  auto it = runtimes_.find(sidechain);
  if (it == runtimes_.end()) return std::nullopt;
  auto s = it->second.history.find(block);
  if (s == it->second.history.end()) return std::nullopt;
  return s->second;
}

Bytes SidechainNode::storage_dump() const {
  ByteWriter w;
  for (const auto& [id, rt] : runtimes_) {
    w.fixed(id);
    for (const auto& d : rt.member_domains) w.blob(d);
    if (rt.secret) w.blob(*rt.secret);
    if (rt.key) w.raw(ByteView(rt.key->key));
    for (const auto& [n, s] : rt.history) w.u64(n).blob(s.encode());
    for (const auto& [n, blob] : rt.sealed) w.u64(n).blob(blob);
    for (const auto& tx : rt.mempool) w.blob(tx.encode());
  }
  return w.take();
}

}  // namespace eps::sidechain
