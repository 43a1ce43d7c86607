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
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "eps/era/resolver.hpp"
#include "eps/ledger/ledger.hpp"
#include "eps/pinning/pinning.hpp"
#include "eps/sidechain/node.hpp"

namespace eps::netsim {

using sidechain::NodeMode;
using sidechain::SidechainNode;
using sidechain::SidechainTx;

/// Address an organisation uses on every chain: the last 20 bytes of
/// keccak256(domain).
Address org_address(std::string_view domain);
/// Address of the registrar operating a root ERA with this label.
Address registrar_address(std::string_view label);

struct NetworkConfig {
  std::uint64_t seed = 0;
  std::size_t enqueue_cap = 64;
  std::size_t livelock_cap = 1'000'000;
  pinning::VotingConfig voting;
};

struct OrgEntry {
  std::string domain;
  Address address;
  std::optional<ContractId> orginfo;
  std::optional<ContractId> delegate_era;
  std::vector<std::string> nodes;
};

struct EstablishmentRequest {
  std::string initiator;  // node id, the requesting participant
  std::string initiator_org;
  std::set<std::string> member_domains;
  Digest256 sidechain_id;
  std::vector<era::ResolvedBootstrap> bootstrap;
};

struct JoinReply {
  std::string node;
  bool accepted = false;
  std::optional<Digest256> mask;
};

/// Network-wide bookkeeping for one sidechain.
struct SidechainMeta {
  Digest256 id;
  std::set<std::string> member_domains;
  std::vector<std::string> members;  // node ids in join order
  std::string initiator;
  Bytes secret;
  Bytes root_key;
  std::vector<std::vector<SidechainTx>> block_txs;  // [n-1] = txs of block n
  std::vector<Bytes> block_sealed;                  // [n-1] = sealed state of block n
  std::vector<Digest256> roots;                     // [n] = root after block n
  std::optional<std::string> guardian;
  bool corrupt_next_pin = false;

  std::uint64_t head() const { return roots.size() - 1; }
};

/// Deterministic single-threaded harness: one management ledger, the
/// participant nodes, and a FIFO message queue. Delivery order depends
/// only on send order; all randomness comes from the configured seed.
class SimNetwork {
 public:
  explicit SimNetwork(NetworkConfig config = {});

  SimNetwork(const SimNetwork&) = delete;
  SimNetwork& operator=(const SimNetwork&) = delete;
  SimNetwork(SimNetwork&&) = default;
  SimNetwork& operator=(SimNetwork&&) = default;

  // ---- topology ----
  const OrgEntry& add_org(const std::string& domain);
  /// Default policy: the node id and the org address get every API class,
  /// the org address every tx type, and the node id may initiate
  /// establishment.
  SidechainNode& add_node(const std::string& org, const std::string& node_id, NodeMode mode);
  SidechainNode& node(std::string_view id);
  const SidechainNode& node(std::string_view id) const;
  bool has_node(std::string_view id) const { return nodes_.contains(std::string(id)); }
  const OrgEntry& org(std::string_view domain) const;
  const std::map<std::string, OrgEntry, std::less<>>& orgs() const { return orgs_; }
  /// Going back online replays missed sidechain blocks from a peer.
  void set_online(std::string_view node_id, bool online);
  bool online(std::string_view node_id) const { return !offline_.contains(std::string(node_id)); }

  // ---- management chain and registries ----
  Ledger& mgmt() { return mgmt_; }
  const Ledger& mgmt() const { return mgmt_; }
  const ContractId& pinning_contract() const { return pinning_; }
  const pinning::PinningContract& pinning() const;
  /// Executes a management-chain call in its own block; reverts rethrow.
  TxReceipt mgmt_call(const Address& sender, const ContractId& target, std::string call, Bytes arg);

  ContractId deploy_root_era(const std::string& label);
  ContractId root_era(std::string_view label) const;
  ContractId ensure_delegate_era(const std::string& org_domain);
  ContractId ensure_orginfo(const std::string& org_domain);
  /// Lists `domain` in `era`, signed by `caller`.
  void era_list(const ContractId& era, const Address& caller, const std::string& domain,
                std::optional<ContractId> delegate, std::optional<ContractId> orginfo);
  void orginfo_put(const std::string& org_domain, std::string_view name, ByteView value);
  void set_trusted_roots(std::vector<ContractId> roots) { trusted_roots_ = std::move(roots); }
  const std::vector<ContractId>& trusted_roots() const { return trusted_roots_; }

  // ---- transport ----
  void send(const std::string& from, const std::string& to, std::string kind, std::function<void()> deliver);
  /// Delivers exactly the messages queued before the call.
  std::size_t step();
  std::size_t run_until_idle();
  std::size_t queued() const { return queue_.size(); }
  const std::vector<std::string>& trace() const { return trace_; }

  // ---- sidechain lifecycle ----
  Digest256 find_or_establish(const std::string& initiator, const std::vector<std::string>& domains);
  Digest256 find_or_establish(const std::string& initiator, const std::vector<std::string>& domains,
                              const std::vector<ContractId>& roots);
  /// Receiving side of an invite: policy check, then a local runtime.
  JoinReply handle_join_invite(const std::string& node_id, const EstablishmentRequest& request);
  /// New node of a member org: members re-resolve the org via ERA before
  /// linking. Throws node-not-listed naming the members that refused.
  void add_node_flow(const std::string& org_domain, const std::string& new_node, const Digest256& sidechain);

  const SidechainMeta& meta(const Digest256& sidechain) const;
  const std::map<Digest256, SidechainMeta>& sidechains() const { return sidechains_; }

  /// API call on `node`; forwards the tx to the other plaintext members.
  SidechainTx submit(const std::string& node_id, std::string_view participant, const Digest256& sidechain,
                     SidechainTx tx);
  /// Round-robin proposer executes its mempool; every other reachable
  /// member re-executes and must reach the same root.
  sidechain::AppliedBlock produce_block(const Digest256& sidechain);

  /// Posts pins for every N-th block not yet pinned and keeps doing so
  /// after each new block. Returns the map keys posted now.
  std::vector<Digest256> guardian_pin_cycle(const std::string& guardian, const Digest256& sidechain,
                                            std::uint64_t every);
  void corrupt_next_pin(const Digest256& sidechain);

  /// Block-anchored read of another sidechain stored into dest_contract /
  /// dest_key on the origin sidechain. Returns the value read.
  std::string cross_chain_read(const std::string& origin_node, const Address& sender, const Digest256& sidechain,
                               const Digest256& target, std::uint64_t block, const std::string& contract,
                               const std::string& key, std::uint64_t window, const std::string& dest_contract,
                               const std::string& dest_key);
  /// Value an anchored read resolves to, served by the first reachable
  /// plaintext member of the target.
  std::string serve_anchored_read(const sidechain::AnchoredRead& anchor) const;

  // ---- governance (through the node's org address) ----
  std::uint64_t propose(const std::string& node_id, const Digest256& sidechain, pinning::ProposalKind kind,
                        ByteView subject);
  /// add-unmasked proposal for an organisation; on approval finalize()
  /// invites its nodes and hands over the secret.
  std::uint64_t propose_add_org(const std::string& node_id, const Digest256& sidechain, const std::string& domain);
  void vote(const std::string& node_id, std::uint64_t proposal, bool approve);
  bool finalize(const std::string& node_id, std::uint64_t proposal);
  std::uint64_t contest(const std::string& node_id, const Digest256& sidechain, std::size_t pin_index);
  void unmask(const std::string& node_id, const Digest256& sidechain);

  std::mt19937_64& rng() { return rng_; }

 private:
  struct PendingAdmission {
    Digest256 sidechain;
    std::string domain;
    std::string proposer;
  };

  SidechainMeta& meta_mut(const Digest256& sidechain);
  Bytes random_bytes(std::size_t n);
  std::vector<std::string> resolve_nodes(const std::string& domain, const std::vector<ContractId>& roots,
                                         era::ResolvedBootstrap* out = nullptr) const;
  std::vector<std::string> reachable_plaintext(const SidechainMeta& m) const;
  void invite(const std::string& from, const std::vector<std::string>& targets, const EstablishmentRequest& req,
              std::map<std::string, JoinReply>& replies);
  void hand_over(const std::string& from, const Digest256& sidechain, const std::vector<std::string>& nodes);
  void catch_up(const std::string& node_id, const Digest256& sidechain);
  std::vector<Digest256> run_pin_cycle(const Digest256& sidechain);
  void admit_org(const PendingAdmission& admission);

  NetworkConfig config_;
  std::mt19937_64 rng_;
  Ledger mgmt_;
  Address operator_;
  ContractId pinning_;
  std::map<std::string, ContractId, std::less<>> root_eras_;
  std::vector<ContractId> trusted_roots_;
  std::map<std::string, OrgEntry, std::less<>> orgs_;
  std::map<std::string, SidechainNode, std::less<>> nodes_;
  std::set<std::string> offline_;
  std::map<Digest256, SidechainMeta> sidechains_;
  std::map<std::string, std::uint64_t> creation_counters_;
  std::map<std::pair<Digest256, std::string>, Digest256> org_salts_;
  std::map<std::uint64_t, PendingAdmission> admissions_;

  struct Message {
    std::string from;
    std::string to;
    std::string kind;
    std::function<void()> deliver;
  };
  std::deque<Message> queue_;
  std::vector<std::string> trace_;
  std::uint64_t clock_ = 0;
  std::size_t sent_in_delivery_ = 0;
  bool delivering_ = false;
};

}  // namespace eps::netsim
