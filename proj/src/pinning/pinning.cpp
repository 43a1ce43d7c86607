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

#include "eps/pinning/pinning.hpp"

#include <algorithm>

#include "eps/crypto/keccak.hpp"
#include "eps/crypto/masking.hpp"

namespace eps::pinning {
namespace {

template <typename T>
Bytes with_presence(const std::optional<T>& v) {
  if (!v) return {0};
  Bytes out{1};
  auto body = v->encode();
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

__extension__ typedef unsigned __int128 u128;

bool has_prefix(const Bytes& key, const Bytes& prefix) {
  return key.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), key.begin());
}

}  // namespace

std::string_view to_string(PinStatus s) {
  switch (s) {
    case PinStatus::normal: return "normal";
    case PinStatus::contested: return "contested";
    case PinStatus::voted_valid: return "voted-valid";
    case PinStatus::voted_invalid: return "voted-invalid";
  }
  return "?";
}

std::string_view to_string(ProposalKind k) {
  switch (k) {
    case ProposalKind::add_unmasked: return "add-unmasked";
    case ProposalKind::add_masked: return "add-masked";
    case ProposalKind::remove_participant: return "remove-participant";
    case ProposalKind::change_voting_config: return "change-voting-config";
    case ProposalKind::pin_validity: return "pin-validity";
  }
  return "?";
}

std::optional<ProposalKind> parse_proposal_kind(std::string_view s) {
  for (auto k : {ProposalKind::add_unmasked, ProposalKind::add_masked, ProposalKind::remove_participant,
                 ProposalKind::change_voting_config, ProposalKind::pin_validity}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

Bytes PinEntry::encode() const {
  ByteWriter w;
  w.fixed(pin).u64(posted_at).u8(static_cast<std::uint8_t>(status));
  return w.take();
}

PinEntry PinEntry::decode(ByteView data) {
  ByteReader r(data);
  PinEntry e;
  e.pin = r.fixed<Digest256>();
  e.posted_at = r.u64();
  auto s = r.u8();
  if (s > 3) fail(ErrorCode::malformed_input, "bad pin status");
  e.status = static_cast<PinStatus>(s);
  r.expect_end();
  return e;
}

void VotingConfig::validate() const {
  if (period_blocks == 0 || threshold_num == 0 || threshold_den == 0 || threshold_num > threshold_den) {
    fail(ErrorCode::invalid_voting_config, "need period > 0 and 0 < num <= den");
  }
}

Bytes VotingConfig::encode() const {
  ByteWriter w;
  w.u64(period_blocks).u64(threshold_num).u64(threshold_den);
  return w.take();
}

VotingConfig VotingConfig::decode(ByteView data) {
  ByteReader r(data);
  VotingConfig v{r.u64(), r.u64(), r.u64()};
  r.expect_end();
  return v;
}

Bytes Proposal::encode() const {
  ByteWriter w;
  w.u64(id).u8(static_cast<std::uint8_t>(kind)).blob(subject).fixed(sidechain_id).u64(deadline);
  w.u8(outcome ? (*outcome ? 2 : 1) : 0);
  w.u32(static_cast<std::uint32_t>(yes.size()));
  for (const auto& a : yes) w.fixed(a);
  w.u32(static_cast<std::uint32_t>(no.size()));
  for (const auto& a : no) w.fixed(a);
  return w.take();
}

Proposal Proposal::decode(ByteView data) {
  ByteReader r(data);
  Proposal p;
  p.id = r.u64();
  auto k = r.u8();
  if (k < 1 || k > 5) fail(ErrorCode::malformed_input, "bad proposal kind");
  p.kind = static_cast<ProposalKind>(k);
  p.subject = r.blob();
  p.sidechain_id = r.fixed<Digest256>();
  p.deadline = r.u64();
  auto o = r.u8();
  if (o > 2) fail(ErrorCode::malformed_input, "bad proposal outcome");
  if (o != 0) p.outcome = (o == 2);
  for (auto n = r.u32(); n > 0; --n) p.yes.insert(r.fixed<Address>());
  for (auto n = r.u32(); n > 0; --n) p.no.insert(r.fixed<Address>());
  r.expect_end();
  return p;
}

Bytes SidechainRecord::encode() const {
  ByteWriter w;
  w.fixed(id).u32(static_cast<std::uint32_t>(unmasked.size()));
  for (const auto& a : unmasked) w.fixed(a);
  w.u32(static_cast<std::uint32_t>(masked.size()));
  for (const auto& m : masked) w.fixed(m);
  w.raw(voting.encode()).u64(registered_at);
  return w.take();
}

SidechainRecord SidechainRecord::decode(ByteView data) {
  ByteReader r(data);
  SidechainRecord s;
  s.id = r.fixed<Digest256>();
  for (auto n = r.u32(); n > 0; --n) s.unmasked.insert(r.fixed<Address>());
  for (auto n = r.u32(); n > 0; --n) s.masked.insert(r.fixed<Digest256>());
  s.voting = VotingConfig::decode(r.raw(24));
  s.registered_at = r.u64();
  r.expect_end();
  return s;
}

Digest256 compute_map_key(const Digest256& sidechain_id, const Digest256& previous_pin,
                          const Digest256& prng_value) {
  return keccak256_concat({sidechain_id.view(), previous_pin.view(), prng_value.view()});
}

const SidechainRecord& PinningContract::registered(const Digest256& id) const {
  auto it = sidechains_.find(id);
  if (it == sidechains_.end()) fail(ErrorCode::sidechain_not_registered, "sidechain " + id.hex() + " not registered");
  return it->second;
}

void PinningContract::register_sidechain(const CallContext& ctx, const Digest256& id,
                                         const std::vector<Address>& unmasked,
                                         const std::vector<Digest256>& masked, const VotingConfig& voting) {
  if (sidechains_.contains(id)) fail(ErrorCode::duplicate_sidechain, "sidechain " + id.hex() + " already registered");
  if (unmasked.empty() && masked.empty()) fail(ErrorCode::empty_participants, "no participants");
  if (std::find(unmasked.begin(), unmasked.end(), ctx.sender) == unmasked.end()) {
    fail(ErrorCode::caller_not_member, ctx.sender.hex() + " is not an unmasked participant");
  }
  voting.validate();
  SidechainRecord rec;
  rec.id = id;
  rec.unmasked.insert(unmasked.begin(), unmasked.end());
  rec.masked.insert(masked.begin(), masked.end());
  rec.voting = voting;
  rec.registered_at = ctx.block_number;
  sidechains_.emplace(id, std::move(rec));
}

void PinningContract::post_pin(const CallContext& ctx, const Digest256& map_key, const Digest256& pin) {
  if (pins_.contains(map_key)) fail(ErrorCode::key_occupied, "map key " + map_key.hex() + " occupied");
  pins_.emplace(map_key, PinEntry{pin, ctx.block_number, PinStatus::normal});
}

std::uint64_t PinningContract::contest_pin(const CallContext& ctx, const Digest256& previous_map_key,
                                           const Digest256& prng_value, const Digest256& sidechain_id) {
  const auto& rec = registered(sidechain_id);
  Digest256 previous_pin;
  if (!previous_map_key.is_zero()) {
    auto prev = pins_.find(previous_map_key);
    if (prev == pins_.end()) fail(ErrorCode::unknown_previous_key, "no pin at " + previous_map_key.hex());
    previous_pin = prev->second.pin;
  }
  auto key = compute_map_key(sidechain_id, previous_pin, prng_value);
  auto it = pins_.find(key);
  if (it == pins_.end()) fail(ErrorCode::derived_key_not_found, "no pin at derived key " + key.hex());
  if (it->second.status != PinStatus::normal) {
    fail(ErrorCode::already_contested, "pin at " + key.hex() + " is " + std::string(to_string(it->second.status)));
  }
  it->second.status = PinStatus::contested;

  Proposal p;
  p.id = next_proposal_++;
  p.kind = ProposalKind::pin_validity;
  p.subject = key.to_vector();
  p.sidechain_id = sidechain_id;
  p.deadline = ctx.block_number + rec.voting.period_blocks;
  proposals_.emplace(p.id, p);
  return p.id;
}

void PinningContract::unmask(const CallContext& ctx, const Digest256& sidechain_id, const Digest256& salt) {
  registered(sidechain_id);
  auto& rec = sidechains_.at(sidechain_id);
  auto mask = mask_participant(ctx.sender, salt);
  auto it = rec.masked.find(mask);
  if (it == rec.masked.end()) fail(ErrorCode::no_matching_mask, "no masked participant matches");
  rec.masked.erase(it);
  rec.unmasked.insert(ctx.sender);
}

std::uint64_t PinningContract::propose(const CallContext& ctx, const Digest256& sidechain_id, ProposalKind kind,
                                       ByteView subject) {
  const auto& rec = registered(sidechain_id);
  if (!rec.unmasked.contains(ctx.sender)) fail(ErrorCode::not_unmasked, ctx.sender.hex() + " is not unmasked");
  switch (kind) {
    case ProposalKind::add_unmasked:
      if (subject.size() != Address::kSize) fail(ErrorCode::invalid_proposal, "add-unmasked takes a 20-byte address");
      break;
    case ProposalKind::add_masked:
      if (subject.size() != Digest256::kSize) fail(ErrorCode::invalid_proposal, "add-masked takes a 32-byte mask");
      break;
    case ProposalKind::remove_participant:
      if (subject.size() != Address::kSize && subject.size() != Digest256::kSize) {
        fail(ErrorCode::invalid_proposal, "remove takes a 20-byte address or 32-byte mask");
      }
      break;
    case ProposalKind::change_voting_config:
      if (subject.size() != 24) fail(ErrorCode::invalid_proposal, "voting config is 24 bytes");
      VotingConfig::decode(subject).validate();
      break;
    case ProposalKind::pin_validity:
      fail(ErrorCode::invalid_proposal, "pin-validity proposals are opened by contesting");
  }
  Proposal p;
  p.id = next_proposal_++;
  p.kind = kind;
  p.subject.assign(subject.begin(), subject.end());
  p.sidechain_id = sidechain_id;
  p.deadline = ctx.block_number + rec.voting.period_blocks;
  proposals_.emplace(p.id, p);
  return p.id;
}

Proposal& PinningContract::open_proposal(std::uint64_t id) {
  auto it = proposals_.find(id);
  if (it == proposals_.end()) fail(ErrorCode::unknown_proposal, "no proposal " + std::to_string(id));
  if (it->second.outcome) fail(ErrorCode::already_finalized, "proposal " + std::to_string(id) + " finalized");
  return it->second;
}

void PinningContract::cast_vote(const CallContext& ctx, std::uint64_t proposal_id, bool approve) {
  auto& p = open_proposal(proposal_id);
  const auto& rec = registered(p.sidechain_id);
  if (!rec.unmasked.contains(ctx.sender)) fail(ErrorCode::not_unmasked, ctx.sender.hex() + " is not unmasked");
  if (ctx.block_number > p.deadline) {
    fail(ErrorCode::deadline_passed, "deadline was block " + std::to_string(p.deadline));
  }
  if (p.yes.contains(ctx.sender) || p.no.contains(ctx.sender)) {
    fail(ErrorCode::already_voted, ctx.sender.hex() + " already voted");
  }
  (approve ? p.yes : p.no).insert(ctx.sender);
}

bool PinningContract::finalize(const CallContext& ctx, std::uint64_t proposal_id) {
  auto& p = open_proposal(proposal_id);
  if (ctx.block_number <= p.deadline) {
    fail(ErrorCode::voting_open, "voting open until block " + std::to_string(p.deadline));
  }
  const auto& rec = registered(p.sidechain_id);
  // Strict: |yes| / |unmasked| > num / den.
  bool approved = static_cast<u128>(p.yes.size()) * rec.voting.threshold_den >
                  static_cast<u128>(rec.voting.threshold_num) * rec.unmasked.size();
  p.outcome = approved;
  apply(p, approved);
  return approved;
}

void PinningContract::apply(const Proposal& p, bool approved) {
  auto& rec = sidechains_.at(p.sidechain_id);
  if (p.kind == ProposalKind::pin_validity) {
    pins_.at(Digest256::from_view(p.subject)).status = approved ? PinStatus::voted_invalid : PinStatus::voted_valid;
    return;
  }
  if (!approved) return;
  switch (p.kind) {
    case ProposalKind::add_unmasked: rec.unmasked.insert(Address::from_view(p.subject)); break;
    case ProposalKind::add_masked: rec.masked.insert(Digest256::from_view(p.subject)); break;
    case ProposalKind::remove_participant:
      if (p.subject.size() == Address::kSize) {
        rec.unmasked.erase(Address::from_view(p.subject));
      } else {
        rec.masked.erase(Digest256::from_view(p.subject));
      }
      break;
    case ProposalKind::change_voting_config: rec.voting = VotingConfig::decode(p.subject); break;
    case ProposalKind::pin_validity: break;
  }
}

std::optional<PinEntry> PinningContract::pin(const Digest256& map_key) const {
  auto it = pins_.find(map_key);
  if (it == pins_.end()) return std::nullopt;
  return it->second;
}

const SidechainRecord* PinningContract::sidechain(const Digest256& id) const {
  auto it = sidechains_.find(id);
  return it == sidechains_.end() ? nullptr : &it->second;
}

const Proposal* PinningContract::proposal(std::uint64_t id) const {
  auto it = proposals_.find(id);
  return it == proposals_.end() ? nullptr : &it->second;
}

Bytes PinningContract::call(const CallContext& ctx, std::string_view name, std::span<const Bytes> args) {
  ByteReader r(single_arg(args, name));
  Bytes out;
  if (name == "registerSidechain") {
    auto id = r.fixed<Digest256>();
    std::vector<Address> unmasked(r.u32());
    for (auto& a : unmasked) a = r.fixed<Address>();
    std::vector<Digest256> masked(r.u32());
    for (auto& m : masked) m = r.fixed<Digest256>();
    auto voting = VotingConfig::decode(r.raw(24));
    r.expect_end();
    register_sidechain(ctx, id, unmasked, masked, voting);
  } else if (name == "postPin") {
    auto key = r.fixed<Digest256>();
    auto pin = r.fixed<Digest256>();
    r.expect_end();
    post_pin(ctx, key, pin);
  } else if (name == "contestPin") {
    auto prev = r.fixed<Digest256>();
    auto value = r.fixed<Digest256>();
    auto id = r.fixed<Digest256>();
    r.expect_end();
    ByteWriter w;
    w.u64(contest_pin(ctx, prev, value, id));
    out = w.take();
  } else if (name == "unmask") {
    auto id = r.fixed<Digest256>();
    auto salt = r.fixed<Digest256>();
    r.expect_end();
    unmask(ctx, id, salt);
  } else if (name == "propose") {
    auto id = r.fixed<Digest256>();
    auto kind = r.u8();
    if (kind < 1 || kind > 5) fail(ErrorCode::invalid_proposal, "unknown proposal kind");
    ByteWriter w;
    w.u64(propose(ctx, id, static_cast<ProposalKind>(kind), r.rest()));
    out = w.take();
  } else if (name == "vote") {
    auto id = r.u64();
    auto approve = r.u8();
    r.expect_end();
    cast_vote(ctx, id, approve != 0);
  } else if (name == "finalize") {
    auto id = r.u64();
    r.expect_end();
    out = {static_cast<std::uint8_t>(finalize(ctx, id) ? 1 : 0)};
  } else {
    fail(ErrorCode::unknown_call, "pinning contract has no call '" + std::string(name) + "'");
  }
  return out;
}

Bytes PinningContract::query(std::string_view name, std::span<const Bytes> args) const {
  const auto& arg = single_arg(args, name);
  if (name == "getPin") return with_presence(pin(Digest256::from_view(arg)));
  if (name == "getSidechain") {
    auto* s = sidechain(Digest256::from_view(arg));
    return with_presence(s ? std::optional<SidechainRecord>(*s) : std::nullopt);
  }
  if (name == "getProposal") {
    ByteReader r(arg);
    auto* p = proposal(r.u64());
    return with_presence(p ? std::optional<Proposal>(*p) : std::nullopt);
  }
  fail(ErrorCode::unknown_call, "pinning contract has no query '" + std::string(name) + "'");
}

KvMap PinningContract::encode() const {
  KvMap kv;
  kv[kv_key("kind")] = {static_cast<std::uint8_t>(ContractKind::mgmt_pinning)};
  ByteWriter next;
  next.u64(next_proposal_);
  kv[kv_key("next-proposal")] = next.take();
  for (const auto& [k, e] : pins_) kv[kv_key("pin/", k.view())] = e.encode();
  for (const auto& [id, s] : sidechains_) kv[kv_key("sc/", id.view())] = s.encode();
  for (const auto& [id, p] : proposals_) kv[kv_key("prop/", be64(id))] = p.encode();
  return kv;
}

std::unique_ptr<PinningContract> PinningContract::decode(const KvMap& kv) {
  auto c = std::make_unique<PinningContract>();
  const auto pin_prefix = kv_key("pin/");
  const auto sc_prefix = kv_key("sc/");
  const auto prop_prefix = kv_key("prop/");
  for (const auto& [k, v] : kv) {
    if (k == kv_key("next-proposal")) {
      ByteReader r(v);
      c->next_proposal_ = r.u64();
    } else if (has_prefix(k, pin_prefix)) {
      c->pins_[Digest256::from_view(ByteView(k).subspan(pin_prefix.size()))] = PinEntry::decode(v);
    } else if (has_prefix(k, sc_prefix)) {
      auto rec = SidechainRecord::decode(v);
      c->sidechains_.emplace(rec.id, std::move(rec));
    } else if (has_prefix(k, prop_prefix)) {
      auto p = Proposal::decode(v);
      c->proposals_.emplace(p.id, std::move(p));
    }
  }
  return c;
}

Bytes encode_register_args(const Digest256& id, const std::vector<Address>& unmasked,
                           const std::vector<Digest256>& masked, const VotingConfig& voting) {
  ByteWriter w;
  w.fixed(id).u32(static_cast<std::uint32_t>(unmasked.size()));
  for (const auto& a : unmasked) w.fixed(a);
  w.u32(static_cast<std::uint32_t>(masked.size()));
  for (const auto& m : masked) w.fixed(m);
  w.raw(voting.encode());
  return w.take();
}

Bytes encode_post_pin_args(const Digest256& map_key, const Digest256& pin) {
  return concat({map_key.view(), pin.view()});
}

Bytes encode_contest_args(const Digest256& previous_map_key, const Digest256& prng_value,
                          const Digest256& sidechain_id) {
  return concat({previous_map_key.view(), prng_value.view(), sidechain_id.view()});
}

Bytes encode_unmask_args(const Digest256& sidechain_id, const Digest256& salt) {
  return concat({sidechain_id.view(), salt.view()});
}

Bytes encode_propose_args(const Digest256& sidechain_id, ProposalKind kind, ByteView subject) {
  ByteWriter w;
  w.fixed(sidechain_id).u8(static_cast<std::uint8_t>(kind)).raw(subject);
  return w.take();
}

Bytes encode_vote_args(std::uint64_t proposal_id, bool approve) {
  ByteWriter w;
  w.u64(proposal_id).u8(approve ? 1 : 0);
  return w.take();
}

Bytes encode_finalize_args(std::uint64_t proposal_id) {
  ByteWriter w;
  w.u64(proposal_id);
  return w.take();
}

std::uint64_t decode_u64_result(ByteView out) {
  ByteReader r(out);
  auto v = r.u64();
  r.expect_end();
  return v;
}

}  // namespace eps::pinning
