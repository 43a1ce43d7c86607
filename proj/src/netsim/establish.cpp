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

#include <algorithm>

#include "eps/crypto/keccak.hpp"
#include "eps/crypto/masking.hpp"
#include "eps/netsim/network.hpp"

namespace eps::netsim {
namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

Digest256 sidechain_identifier(const std::set<std::string>& domains, std::uint64_t counter) {
  std::string joined;
  for (const auto& d : domains) joined += (joined.empty() ? "" : ",") + d;
  return keccak256_concat({as_bytes(joined), be64(counter)});
}

}  // namespace

std::vector<std::string> SimNetwork::resolve_nodes(const std::string& domain, const std::vector<ContractId>& roots,
                                                   era::ResolvedBootstrap* out) const {
  auto bootstrap = era::resolve(roots, era::DomainName::parse(domain),
                                {std::string(era::kEnodeName), std::string(era::kCreatorEndpointName)},
                                mgmt_.state());
  std::vector<std::string> nodes;
  auto add = [&](const std::string& id) {
    if (nodes_.contains(id) && node(id).org() == domain &&
        std::find(nodes.begin(), nodes.end(), id) == nodes.end()) {
      nodes.push_back(id);
    }
  };
  if (auto v = bootstrap.first(era::kCreatorEndpointName)) add(to_string(*v));
  if (auto v = bootstrap.first(era::kEnodeName)) {
    for (const auto& id : sidechain::split_list(to_string(*v))) add(id);
  }
  if (out != nullptr) *out = std::move(bootstrap);
  return nodes;
}

JoinReply SimNetwork::handle_join_invite(const std::string& node_id, const EstablishmentRequest& request) {
  auto& n = node(node_id);
  JoinReply reply{node_id, false, std::nullopt};
  if (!n.member(request.sidechain_id) &&
      !sidechain::evaluate_establishment_request(n.policy(), request.initiator_org, request.initiator)) {
    return reply;
  }
  auto& rt = n.join(request.sidechain_id, request.member_domains);
  reply.accepted = true;
  if (n.policy().masked_participation) {
    auto key = std::make_pair(request.sidechain_id, n.org());
    auto it = org_salts_.find(key);
    if (it == org_salts_.end()) it = org_salts_.emplace(key, Digest256::from_view(random_bytes(32))).first;
    rt.salt = it->second;
    reply.mask = mask_participant(org(n.org()).address, it->second);
  }
  return reply;
}

void SimNetwork::invite(const std::string& from, const std::vector<std::string>& targets,
                        const EstablishmentRequest& req, std::map<std::string, JoinReply>& replies) {
  for (const auto& target : targets) {
    send(from, target, "join-invite", [this, from, target, req, &replies] {
      auto reply = handle_join_invite(target, req);
      send(target, from, reply.accepted ? "join-accept" : "join-deny",
           [target, reply, &replies] { replies[target] = reply; });
    });
  }
  run_until_idle();
}

void SimNetwork::hand_over(const std::string& from, const Digest256& sidechain, const std::vector<std::string>& nodes) {
  const auto& m = meta(sidechain);
  for (const auto& id : nodes) {
    // Ciphertext-only nodes get the secret (for map keys) but no state key.
    Bytes root_key = node(id).mode() == NodeMode::plaintext ? m.root_key : Bytes{};
    send(from, id, "secret", [this, id, sidechain, secret = m.secret, root_key] {
      std::optional<ByteView> key;
      if (!root_key.empty()) key = ByteView(root_key);
      node(id).install_secret(sidechain, secret, key);
    });
    catch_up(id, sidechain);
  }
  run_until_idle();
}

Digest256 SimNetwork::find_or_establish(const std::string& initiator, const std::vector<std::string>& domains) {
  return find_or_establish(initiator, domains, trusted_roots_);
}

Digest256 SimNetwork::find_or_establish(const std::string& initiator, const std::vector<std::string>& domains,
                                        const std::vector<ContractId>& roots) {
  auto& creator = node(initiator);
  creator.authorize_admin(initiator);
  if (!sidechain::may_initiate_establishment(creator.policy(), initiator)) {
    fail(ErrorCode::initiator_not_authorized, initiator + " may not establish sidechains");
  }
  if (domains.empty()) fail(ErrorCode::configuration, "no domains requested");

  std::set<std::string> member_domains{creator.org()};
  for (const auto& d : domains) member_domains.insert(era::DomainName::parse(d).text());

  for (const auto& [id, rt] : creator.runtimes()) {
    if (!rt.archived && rt.member_domains == member_domains) return id;
  }

  // Bootstrap every other organisation through the ERAs.
  EstablishmentRequest req;
  req.initiator = initiator;
  req.initiator_org = creator.org();
  req.member_domains = member_domains;
  std::map<std::string, std::vector<std::string>> targets;
  std::vector<std::string> unresolved;
  for (const auto& d : member_domains) {
    if (d == creator.org()) continue;
    era::ResolvedBootstrap boot{era::DomainName::parse(d), {}, {}, {}};
    auto nodes = resolve_nodes(d, roots, &boot);
    if (nodes.empty()) {
      unresolved.push_back(d);
    } else {
      targets[d] = nodes;
    }
    req.bootstrap.push_back(std::move(boot));
  }
  if (!unresolved.empty()) fail(ErrorCode::unresolved_domain, "could not resolve " + join(unresolved));

  req.sidechain_id = sidechain_identifier(member_domains, creation_counters_[initiator]++);

  std::vector<std::string> all_targets;
  for (const auto& [d, nodes] : targets) all_targets.insert(all_targets.end(), nodes.begin(), nodes.end());
  std::map<std::string, JoinReply> replies;
  invite(initiator, all_targets, req, replies);

  std::vector<std::string> rejected;
  std::vector<std::string> joined;
  std::map<std::string, std::optional<Digest256>> org_mask;
  for (const auto& [d, nodes] : targets) {
    bool any = false;
    for (const auto& id : nodes) {
      auto it = replies.find(id);
      if (it == replies.end() || !it->second.accepted) continue;
      if (!any) org_mask[d] = it->second.mask;
      any = true;
      joined.push_back(id);
    }
    if (!any) rejected.push_back(d);
  }

  auto abort_joined = [&] {
    for (const auto& id : joined) {
      send(initiator, id, "join-abort", [this, id, sc = req.sidechain_id] { node(id).leave(sc); });
    }
    run_until_idle();
  };
  if (!rejected.empty()) {
    abort_joined();
    fail(ErrorCode::establishment_rejected, "rejected by " + join(rejected));
  }

  // Register on the management chain.
  std::vector<Address> unmasked{org(creator.org()).address};
  std::vector<Digest256> masked;
  for (const auto& [d, mask] : org_mask) {
    if (mask) {
      masked.push_back(*mask);
    } else {
      unmasked.push_back(org(d).address);
    }
  }
  try {
    mgmt_call(org(creator.org()).address, pinning_, "registerSidechain",
              pinning::encode_register_args(req.sidechain_id, unmasked, masked, config_.voting));
  } catch (const Error&) {
    abort_joined();
    throw;
  }

  creator.join(req.sidechain_id, member_domains);
  SidechainMeta m;
  m.id = req.sidechain_id;
  m.member_domains = member_domains;
  m.initiator = initiator;
  m.secret = random_bytes(32);
  m.root_key = random_bytes(32);
  m.roots.push_back(sidechain::SidechainState{}.root());
  m.members.push_back(initiator);
  m.members.insert(m.members.end(), joined.begin(), joined.end());
  sidechains_.emplace(m.id, m);
  creator.install_secret(m.id, m.secret, ByteView(m.root_key));
  for (const auto& id : m.members) {
    auto& rt = node(id).runtime(m.id);
    for (const auto& peer : m.members) {
      if (peer != id) rt.peers.insert(peer);
    }
  }
  hand_over(initiator, m.id, joined);
  return m.id;
}

void SimNetwork::add_node_flow(const std::string& org_domain, const std::string& new_node,
                               const Digest256& sidechain) {
  auto& newcomer = node(new_node);
  newcomer.authorize_admin(new_node);
  if (newcomer.org() != org_domain) fail(ErrorCode::configuration, new_node + " does not belong to " + org_domain);
  auto& m = meta_mut(sidechain);
  if (std::find(m.members.begin(), m.members.end(), new_node) != m.members.end()) return;

  std::vector<std::string> refused;
  std::vector<std::string> linked;
  for (const auto& member : m.members) {
    if (!online(member)) continue;
    send(new_node, member, "node-indication", [this, member, new_node, org_domain, sidechain, &refused, &linked] {
      auto& rt = node(member).runtime(sidechain);
      if (!rt.member_domains.contains(org_domain)) return;  // not a member org: ignored
      auto listed = resolve_nodes(org_domain, trusted_roots_);
      if (std::find(listed.begin(), listed.end(), new_node) == listed.end()) {
        refused.push_back(member);
        return;
      }
      rt.peers.insert(new_node);
      linked.push_back(member);
      send(member, new_node, "node-link", [] {});
    });
  }
  run_until_idle();
  if (!refused.empty()) fail(ErrorCode::node_not_listed, new_node + " not ERA-listed; refused by " + join(refused));
  if (linked.empty()) fail(ErrorCode::permission_denied, "indication for " + org_domain + " ignored by all members");

  auto& rt = newcomer.join(sidechain, m.member_domains);
  rt.peers.insert(linked.begin(), linked.end());
  m.members.push_back(new_node);
  // Secret comes from a peer in the same organisation when one is reachable.
  std::string from = linked.front();
  for (const auto& id : linked) {
    if (node(id).org() == org_domain) {
      from = id;
      break;
    }
  }
  hand_over(from, sidechain, {new_node});
}

}  // namespace eps::netsim
