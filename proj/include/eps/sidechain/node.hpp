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
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eps/crypto/aead.hpp"
#include "eps/crypto/prng.hpp"
#include "eps/sidechain/policy.hpp"
#include "eps/sidechain/state.hpp"

namespace eps::sidechain {

enum class NodeMode : std::uint8_t { plaintext, ciphertext_only };

/// Guardian-side pin bookkeeping: one entry per posted pin, in order.
struct PostedPin {
  std::uint64_t block = 0;
  Digest256 map_key;
  Digest256 pin;
};

struct PinCursor {
  PrngState prng;
  std::uint64_t every = 1;
  std::uint64_t last_block = 0;
  std::vector<PostedPin> posted;
};

/// One node's view of one sidechain.
struct SidechainRuntime {
  Digest256 id;
  std::set<std::string> member_domains;
  std::optional<Bytes> secret;
  std::optional<SidechainKey> key;          // plaintext nodes only
  std::map<std::uint64_t, SidechainState> history;  // plaintext nodes only
  std::map<std::uint64_t, Bytes> sealed;    // EPSS blob per block
  std::uint64_t head = 0;
  std::deque<SidechainTx> mempool;
  std::set<std::string> peers;
  std::optional<Digest256> salt;            // set when registered masked
  std::optional<PinCursor> pinning;
  bool archived = false;
};

struct AppliedBlock {
  std::uint64_t number = 0;
  Digest256 root;
  std::vector<SidechainReceipt> receipts;
  Bytes sealed;
};

/// A participant's sidechain node. The public API entry points each check
/// the caller against the node policy exactly once; peer-facing methods
/// (join, apply_block, ...) are driven by the network harness.
class SidechainNode {
 public:
  SidechainNode(std::string id, std::string org, NodeMode mode, PermissionPolicy policy);

  const std::string& id() const { return id_; }
  const std::string& org() const { return org_; }
  NodeMode mode() const { return mode_; }
  const PermissionPolicy& policy() const { return policy_; }
  PermissionPolicy& policy() { return policy_; }

  // ---- API (permissioned) ----

  /// deploy ops need the deploy class, everything else transact; the
  /// sender must also pass check_tx_permission. Returns the queued tx.
  SidechainTx submit_tx(std::string_view participant, const Digest256& sidechain, SidechainTx tx);
  /// Reads head state, or the state at `block` when given.
  std::optional<std::string> read(std::string_view participant, const Digest256& sidechain,
                                  std::string_view contract, std::string_view key,
                                  std::optional<std::uint64_t> block = std::nullopt);
  /// Writes the encrypted head snapshot, drops live state. pending-transactions
  /// if the mempool is not empty.
  void archive(std::string_view participant, const Digest256& sidechain, const std::filesystem::path& path);
  void restore(std::string_view participant, const Digest256& sidechain, const std::filesystem::path& path);
  /// Gate for administrative actions driven through this node (establish,
  /// propose, vote, contest, unmask).
  void authorize_admin(std::string_view participant);

  std::uint64_t audit_count() const { return audit_count_; }

  // ---- peer-facing ----

  bool member(const Digest256& sidechain) const { return runtimes_.contains(sidechain); }
  SidechainRuntime& join(const Digest256& sidechain, const std::set<std::string>& member_domains);
  void leave(const Digest256& sidechain) { runtimes_.erase(sidechain); }
  SidechainRuntime& runtime(const Digest256& sidechain);
  const SidechainRuntime& runtime(const Digest256& sidechain) const;
  const std::map<Digest256, SidechainRuntime>& runtimes() const { return runtimes_; }

  /// Ciphertext-only nodes ignore the root key.
  void install_secret(const Digest256& sidechain, ByteView secret, std::optional<ByteView> root_key);
  /// Adds a forwarded tx to the mempool unless already present.
  void receive_tx(const Digest256& sidechain, const SidechainTx& tx);
  std::vector<SidechainTx> take_mempool(const Digest256& sidechain);

  /// Plaintext only: executes txs on the head state as block head+1.
  AppliedBlock apply_block(const Digest256& sidechain, const std::vector<SidechainTx>& txs,
                           const AnchorResolver& resolver);
  /// Ciphertext-only: stores a sealed block as received.
  void accept_sealed(const Digest256& sidechain, std::uint64_t number, Bytes sealed);

  std::optional<SidechainState> state_at(const Digest256& sidechain, std::uint64_t block) const;

  /// Every byte this node holds for its sidechains, for leak checks.
  Bytes storage_dump() const;

 private:
  void authorize(std::string_view participant, ApiClass c);
  SidechainRuntime& live(const Digest256& sidechain);

  std::string id_;
  std::string org_;
  NodeMode mode_;
  PermissionPolicy policy_;
  std::map<Digest256, SidechainRuntime> runtimes_;
  std::uint64_t next_seq_ = 0;
  std::uint64_t audit_count_ = 0;
};

}  // namespace eps::sidechain
