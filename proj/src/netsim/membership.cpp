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

#include "eps/netsim/network.hpp"

namespace eps::netsim {

std::uint64_t SimNetwork::propose(const std::string& node_id, const Digest256& sidechain, pinning::ProposalKind kind,
                                  ByteView subject) {
  auto& n = node(node_id);
  n.authorize_admin(node_id);
  auto receipt = mgmt_call(org(n.org()).address, pinning_, "propose",
                           pinning::encode_propose_args(sidechain, kind, subject));
  return pinning::decode_u64_result(receipt.output);
}

std::uint64_t SimNetwork::propose_add_org(const std::string& node_id, const Digest256& sidechain,
                                          const std::string& domain) {
  const auto& candidate = org(domain);
  auto id = propose(node_id, sidechain, pinning::ProposalKind::add_unmasked, candidate.address.view());
  admissions_[id] = {sidechain, candidate.domain, node_id};
  return id;
}

void SimNetwork::vote(const std::string& node_id, std::uint64_t proposal, bool approve) {
  auto& n = node(node_id);
  n.authorize_admin(node_id);
  mgmt_call(org(n.org()).address, pinning_, "vote", pinning::encode_vote_args(proposal, approve));
}

bool SimNetwork::finalize(const std::string& node_id, std::uint64_t proposal) {
  auto& n = node(node_id);
  n.authorize_admin(node_id);
  auto receipt = mgmt_call(org(n.org()).address, pinning_, "finalize", pinning::encode_finalize_args(proposal));
  bool approved = !receipt.output.empty() && receipt.output[0] == 1;
  auto it = admissions_.find(proposal);
  if (it != admissions_.end()) {
    auto admission = it->second;
    admissions_.erase(it);
    if (approved) admit_org(admission);
  }
  return approved;
}

void SimNetwork::admit_org(const PendingAdmission& admission) {
  auto& m = meta_mut(admission.sidechain);
  if (m.member_domains.contains(admission.domain)) return;
  auto targets = resolve_nodes(admission.domain, trusted_roots_);
  if (targets.empty()) fail(ErrorCode::unresolved_domain, "could not resolve " + admission.domain);

  auto domains = m.member_domains;
  domains.insert(admission.domain);
  const auto& proposer = node(admission.proposer);
  EstablishmentRequest req{admission.proposer, proposer.org(), domains, m.id, {}};
  std::map<std::string, JoinReply> replies;
  invite(admission.proposer, targets, req, replies);

  std::vector<std::string> joined;
  for (const auto& id : targets) {
    auto it = replies.find(id);
    if (it != replies.end() && it->second.accepted) joined.push_back(id);
  }
  if (joined.empty()) fail(ErrorCode::establishment_rejected, "rejected by " + admission.domain);

  m.member_domains = domains;
  for (const auto& id : m.members) {
    if (node(id).member(m.id)) node(id).runtime(m.id).member_domains = domains;
  }
  for (const auto& id : joined) {
    for (const auto& peer : m.members) {
      node(id).runtime(m.id).peers.insert(peer);
      if (node(peer).member(m.id)) node(peer).runtime(m.id).peers.insert(id);
    }
    m.members.push_back(id);
  }
  // The proposer re-sends the secret to the new organisation.
  hand_over(admission.proposer, m.id, joined);
}

void SimNetwork::unmask(const std::string& node_id, const Digest256& sidechain) {
  auto& n = node(node_id);
  n.authorize_admin(node_id);
  const auto& rt = n.runtime(sidechain);
  if (!rt.salt) fail(ErrorCode::no_matching_mask, node_id + " holds no salt for this sidechain");
  mgmt_call(org(n.org()).address, pinning_, "unmask", pinning::encode_unmask_args(sidechain, *rt.salt));
}

}  // namespace eps::netsim
