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

#include "eps/netsim/network.hpp"

#include <algorithm>

#include "eps/crypto/keccak.hpp"
#include "eps/era/contracts.hpp"
#include "eps/mgmt/contracts.hpp"

namespace eps::netsim {

Address org_address(std::string_view domain) {
  return Address::from_view(keccak256(domain).view().subspan(12));
}

Address registrar_address(std::string_view label) {
  return Address::from_view(keccak256(std::string("registrar:") + std::string(label)).view().subspan(12));
}

SimNetwork::SimNetwork(NetworkConfig config)
    : config_(config),
      rng_(config.seed),
      operator_(Address::from_view(keccak256(std::string_view("mgmt-operator")).view().subspan(12))) {
  config_.voting.validate();
  pinning_ = mgmt::deploy_contract(mgmt_, "mgmt-pinning", {}, operator_);
}

const OrgEntry& SimNetwork::add_org(const std::string& domain) {
  auto d = era::DomainName::parse(domain);
  auto [it, fresh] = orgs_.try_emplace(d.text());
  if (fresh) {
    it->second.domain = d.text();
    it->second.address = org_address(d.text());
  }
  return it->second;
}

SidechainNode& SimNetwork::add_node(const std::string& org, const std::string& node_id, NodeMode mode) {
  auto it = orgs_.find(org);
  if (it == orgs_.end()) fail(ErrorCode::unknown_node, "unknown organisation " + org);
  if (nodes_.contains(node_id)) fail(ErrorCode::configuration, "duplicate node " + node_id);
  sidechain::PermissionPolicy policy;
  policy.grant_all(node_id, it->second.address);
  policy.api_acl[it->second.address.hex()] = policy.api_acl[node_id];
  policy.establish_api_whitelist.insert(node_id);
  it->second.nodes.push_back(node_id);
  return nodes_.emplace(node_id, SidechainNode(node_id, org, mode, std::move(policy))).first->second;
}

SidechainNode& SimNetwork::node(std::string_view id) {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) fail(ErrorCode::unknown_node, "unknown node " + std::string(id));
  return it->second;
}

const SidechainNode& SimNetwork::node(std::string_view id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) fail(ErrorCode::unknown_node, "unknown node " + std::string(id));
  return it->second;
}

const OrgEntry& SimNetwork::org(std::string_view domain) const {
  auto it = orgs_.find(domain);
  if (it == orgs_.end()) fail(ErrorCode::unknown_node, "unknown organisation " + std::string(domain));
  return it->second;
}

void SimNetwork::set_online(std::string_view node_id, bool is_online) {
  node(node_id);
  std::string id(node_id);
  if (!is_online) {
    offline_.insert(id);
    return;
  }
  if (offline_.erase(id) == 0) return;
  for (const auto& [sc, rt] : node(id).runtimes()) {
    if (!rt.archived && sidechains_.contains(sc)) catch_up(id, sc);
  }
  run_until_idle();
}

const pinning::PinningContract& SimNetwork::pinning() const {
  return mgmt_.state().as<pinning::PinningContract>(pinning_);
}

TxReceipt SimNetwork::mgmt_call(const Address& sender, const ContractId& target, std::string call, Bytes arg) {
  std::vector<Bytes> args;
  args.push_back(std::move(arg));
  auto receipt = mgmt_.execute(sender, target, std::move(call), std::move(args));
  if (!receipt.ok()) throw Error(*receipt.revert_code, receipt.revert_reason);
  return receipt;
}

ContractId SimNetwork::deploy_root_era(const std::string& label) {
  if (root_eras_.contains(label)) fail(ErrorCode::configuration, "duplicate root ERA " + label);
  auto id = mgmt::deploy_contract(mgmt_, "root-era", {}, registrar_address(label));
  root_eras_.emplace(label, id);
  return id;
}

ContractId SimNetwork::root_era(std::string_view label) const {
  auto it = root_eras_.find(label);
  if (it == root_eras_.end()) fail(ErrorCode::configuration, "unknown root ERA " + std::string(label));
  return it->second;
}

ContractId SimNetwork::ensure_delegate_era(const std::string& org_domain) {
  auto& o = orgs_.at(org(org_domain).domain);
  if (!o.delegate_era) o.delegate_era = mgmt::deploy_contract(mgmt_, "delegate-era", {}, o.address);
  return *o.delegate_era;
}

ContractId SimNetwork::ensure_orginfo(const std::string& org_domain) {
  auto& o = orgs_.at(org(org_domain).domain);
  if (!o.orginfo) o.orginfo = mgmt::deploy_contract(mgmt_, "orginfo", {}, o.address);
  return *o.orginfo;
}

void SimNetwork::era_list(const ContractId& era_id, const Address& caller, const std::string& domain,
                          std::optional<ContractId> delegate, std::optional<ContractId> orginfo) {
  era::EraRecord rec{era::domain_hash(era::DomainName::parse(domain)), delegate, orginfo, caller};
  mgmt_call(caller, era_id, "setRecord", era::encode_set_record(rec));
}

void SimNetwork::orginfo_put(const std::string& org_domain, std::string_view name, ByteView value) {
  auto info = ensure_orginfo(org_domain);
  mgmt_call(org(org_domain).address, info, "set", era::encode_orginfo_set(era::orginfo_name_key(name), value));
}

void SimNetwork::send(const std::string& from, const std::string& to, std::string kind,
                      std::function<void()> deliver) {
  if (delivering_ && ++sent_in_delivery_ > config_.enqueue_cap) {
    fail(ErrorCode::livelock, "handler exceeded " + std::to_string(config_.enqueue_cap) + " sends");
  }
  queue_.push_back({from, to, std::move(kind), std::move(deliver)});
}

std::size_t SimNetwork::step() {
  std::size_t n = queue_.size();
  std::size_t delivered = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Message m = std::move(queue_.front());
    queue_.pop_front();
    if (offline_.contains(m.to)) continue;
    ++clock_;
    ++delivered;
    trace_.push_back("step=" + std::to_string(clock_) + " from=" + m.from + " to=" + m.to + " kind=" + m.kind);
    delivering_ = true;
    sent_in_delivery_ = 0;
    try {
      m.deliver();
    } catch (...) {
      delivering_ = false;
      throw;
    }
    delivering_ = false;
  }
  return delivered;
}

std::size_t SimNetwork::run_until_idle() {
  std::size_t total = 0;
  while (!queue_.empty()) {
    total += step();
    if (total > config_.livelock_cap) {
      fail(ErrorCode::livelock, "more than " + std::to_string(config_.livelock_cap) + " deliveries");
    }
  }
  return total;
}

SidechainMeta& SimNetwork::meta_mut(const Digest256& sidechain) {
  auto it = sidechains_.find(sidechain);
  if (it == sidechains_.end()) fail(ErrorCode::unknown_sidechain, "unknown sidechain " + sidechain.hex());
  return it->second;
}

const SidechainMeta& SimNetwork::meta(const Digest256& sidechain) const {
  auto it = sidechains_.find(sidechain);
  if (it == sidechains_.end()) fail(ErrorCode::unknown_sidechain, "unknown sidechain " + sidechain.hex());
  return it->second;
}

Bytes SimNetwork::random_bytes(std::size_t n) {
  Bytes out;
  out.reserve(n + 8);
  while (out.size() < n) {
    auto v = rng_();
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  out.resize(n);
  return out;
}

std::vector<std::string> SimNetwork::reachable_plaintext(const SidechainMeta& m) const {
  std::vector<std::string> out;
  for (const auto& id : m.members) {
    const auto& n = node(id);
    if (online(id) && n.mode() == NodeMode::plaintext && n.member(m.id) && !n.runtime(m.id).archived) {
      out.push_back(id);
    }
  }
  return out;
}

SidechainTx SimNetwork::submit(const std::string& node_id, std::string_view participant, const Digest256& sidechain,
                               SidechainTx tx) {
  auto& origin = node(node_id);
  if (!online(node_id)) fail(ErrorCode::unknown_node, "node " + node_id + " is offline");
  auto queued = origin.submit_tx(participant, sidechain, std::move(tx));
  const auto& m = meta(sidechain);
  for (const auto& peer : reachable_plaintext(m)) {
    if (peer == node_id) continue;
    send(node_id, peer, "tx", [this, peer, sidechain, queued] { node(peer).receive_tx(sidechain, queued); });
  }
  run_until_idle();
  return queued;
}

sidechain::AppliedBlock SimNetwork::produce_block(const Digest256& sidechain) {
  auto& m = meta_mut(sidechain);
  auto producers = reachable_plaintext(m);
  if (producers.empty()) fail(ErrorCode::consensus_failure, "no reachable plaintext member");
  const auto proposer = producers[m.head() % producers.size()];
  auto resolver = [this](const sidechain::AnchoredRead& a) { return serve_anchored_read(a); };

  auto txs = node(proposer).take_mempool(sidechain);
  auto applied = node(proposer).apply_block(sidechain, txs, resolver);

  std::map<std::string, Digest256> acks;
  for (const auto& peer : producers) {
    if (peer == proposer) continue;
    send(proposer, peer, "block-proposal", [this, peer, proposer, sidechain, txs, resolver, &acks] {
      auto root = node(peer).apply_block(sidechain, txs, resolver).root;
      send(peer, proposer, "block-ack", [peer, root, &acks] { acks[peer] = root; });
    });
  }
  for (const auto& id : m.members) {
    if (node(id).mode() != NodeMode::ciphertext_only || !online(id)) continue;
    send(proposer, id, "cipher-block", [this, id, sidechain, applied] {
      node(id).accept_sealed(sidechain, applied.number, applied.sealed);
    });
  }
  run_until_idle();

  for (const auto& peer : producers) {
    if (peer == proposer) continue;
    auto it = acks.find(peer);
    if (it == acks.end() || it->second != applied.root) {
      fail(ErrorCode::consensus_failure, "node " + peer + " disagrees on block " + std::to_string(applied.number));
    }
  }
  m.block_txs.push_back(txs);
  m.block_sealed.push_back(applied.sealed);
  m.roots.push_back(applied.root);
  if (m.guardian) run_pin_cycle(sidechain);
  return applied;
}

void SimNetwork::catch_up(const std::string& node_id, const Digest256& sidechain) {
  const auto& m = meta(sidechain);
  auto peers = reachable_plaintext(m);
  std::string from = peers.empty() ? m.initiator : peers.front();
  if (from == node_id && peers.size() > 1) from = peers[1];
  send(from, node_id, "catch-up", [this, node_id, sidechain] {
    const auto& mm = meta(sidechain);
    auto& n = node(node_id);
    auto& rt = n.runtime(sidechain);
    auto resolver = [this](const sidechain::AnchoredRead& a) { return serve_anchored_read(a); };
    for (auto b = rt.head + 1; b <= mm.head(); ++b) {
      if (n.mode() == NodeMode::plaintext) {
        if (n.apply_block(sidechain, mm.block_txs[b - 1], resolver).root != mm.roots[b]) {
          fail(ErrorCode::consensus_failure, "replay diverged on node " + node_id);
        }
      } else {
        n.accept_sealed(sidechain, b, mm.block_sealed[b - 1]);
      }
    }
  });
}

std::string SimNetwork::serve_anchored_read(const sidechain::AnchoredRead& anchor) const {
  const auto& m = meta(anchor.target);
  for (const auto& id : reachable_plaintext(m)) {
    if (auto state = node(id).state_at(anchor.target, anchor.block)) {
      return state->get(anchor.contract, anchor.key).value_or("");
    }
  }
  fail(ErrorCode::unknown_sidechain, "no reachable node holds block " + std::to_string(anchor.block) + " of " +
                                         anchor.target.hex());
}

}  // namespace eps::netsim
