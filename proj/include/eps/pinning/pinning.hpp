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
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "eps/ledger/contract.hpp"
#include "eps/ledger/world_state.hpp"

namespace eps::pinning {

enum class PinStatus : std::uint8_t { normal = 0, contested = 1, voted_valid = 2, voted_invalid = 3 };
std::string_view to_string(PinStatus s);

/// One cell of the shared pin map. Carries no sidechain attribution.
struct PinEntry {
  Digest256 pin;
  std::uint64_t posted_at = 0;
  PinStatus status = PinStatus::normal;

  /// pin ++ u64 postedAt ++ u8 status
  Bytes encode() const;
  static PinEntry decode(ByteView data);
};

struct VotingConfig {
  std::uint64_t period_blocks = 5;
  std::uint64_t threshold_num = 1;
  std::uint64_t threshold_den = 2;

  /// Throws invalid-voting-config unless period > 0 and 0 < num <= den.
  void validate() const;
  Bytes encode() const;
  static VotingConfig decode(ByteView data);
  bool operator==(const VotingConfig&) const = default;
};

enum class ProposalKind : std::uint8_t {
  add_unmasked = 1,
  add_masked = 2,
  remove_participant = 3,
  change_voting_config = 4,
  pin_validity = 5,
};
std::string_view to_string(ProposalKind k);
std::optional<ProposalKind> parse_proposal_kind(std::string_view s);

struct Proposal {
  std::uint64_t id = 0;
  ProposalKind kind = ProposalKind::add_unmasked;
  Bytes subject;
  Digest256 sidechain_id;
  std::set<Address> yes;
  std::set<Address> no;
  std::uint64_t deadline = 0;
  std::optional<bool> outcome;

  Bytes encode() const;
  static Proposal decode(ByteView data);
};

struct SidechainRecord {
  Digest256 id;
  std::set<Address> unmasked;
  std::set<Digest256> masked;
  VotingConfig voting;
  std::uint64_t registered_at = 0;

  Bytes encode() const;
  static SidechainRecord decode(ByteView data);
};

/// Management-and-Pinning contract.
///
/// A pin-validity proposal is opened by contest_pin; a "yes" vote upholds
/// the contest. On approval the pin becomes voted-invalid, otherwise
/// voted-valid.
class PinningContract final : public Contract {
 public:
  void register_sidechain(const CallContext& ctx, const Digest256& id, const std::vector<Address>& unmasked,
                          const std::vector<Digest256>& masked, const VotingConfig& voting);
  void post_pin(const CallContext& ctx, const Digest256& map_key, const Digest256& pin);
  /// A zero previous_map_key contests the first pin of a chain.
  std::uint64_t contest_pin(const CallContext& ctx, const Digest256& previous_map_key,
                            const Digest256& prng_value, const Digest256& sidechain_id);
  void unmask(const CallContext& ctx, const Digest256& sidechain_id, const Digest256& salt);
  std::uint64_t propose(const CallContext& ctx, const Digest256& sidechain_id, ProposalKind kind,
                        ByteView subject);
  void cast_vote(const CallContext& ctx, std::uint64_t proposal_id, bool approve);
  bool finalize(const CallContext& ctx, std::uint64_t proposal_id);

  std::optional<PinEntry> pin(const Digest256& map_key) const;
  const SidechainRecord* sidechain(const Digest256& id) const;
  const Proposal* proposal(std::uint64_t id) const;
  const std::map<Digest256, PinEntry>& pins() const { return pins_; }
  std::uint64_t proposal_count() const { return next_proposal_ - 1; }

  ContractKind kind() const override { return ContractKind::mgmt_pinning; }
  Bytes call(const CallContext& ctx, std::string_view name, std::span<const Bytes> args) override;
  Bytes query(std::string_view name, std::span<const Bytes> args) const override;
  KvMap encode() const override;
  std::unique_ptr<Contract> clone() const override { return std::make_unique<PinningContract>(*this); }

  static std::unique_ptr<PinningContract> decode(const KvMap& kv);

 private:
  const SidechainRecord& registered(const Digest256& id) const;
  Proposal& open_proposal(std::uint64_t id);
  void apply(const Proposal& p, bool approved);

  std::map<Digest256, PinEntry> pins_;
  std::map<Digest256, SidechainRecord> sidechains_;
  std::map<std::uint64_t, Proposal> proposals_;
  std::uint64_t next_proposal_ = 1;
};

// Argument encoders, fixed-width fields concatenated in declaration order.
Bytes encode_register_args(const Digest256& id, const std::vector<Address>& unmasked,
                           const std::vector<Digest256>& masked, const VotingConfig& voting);
Bytes encode_post_pin_args(const Digest256& map_key, const Digest256& pin);
Bytes encode_contest_args(const Digest256& previous_map_key, const Digest256& prng_value,
                          const Digest256& sidechain_id);
Bytes encode_unmask_args(const Digest256& sidechain_id, const Digest256& salt);
Bytes encode_propose_args(const Digest256& sidechain_id, ProposalKind kind, ByteView subject);
Bytes encode_vote_args(std::uint64_t proposal_id, bool approve);
Bytes encode_finalize_args(std::uint64_t proposal_id);
std::uint64_t decode_u64_result(ByteView out);

/// keccak256(sidechainId ++ previousPin ++ prngValue)
Digest256 compute_map_key(const Digest256& sidechain_id, const Digest256& previous_pin,
                          const Digest256& prng_value);

struct LocatedPin {
  std::size_t index = 0;
  Digest256 map_key;
  Digest256 pin;
  PinStatus status = PinStatus::normal;
  std::uint64_t posted_at = 0;
  Digest256 prng_value;
  Digest256 previous_pin;
};

/// Walks the map-key chain for a sidechain. The PRNG advances once per
/// entry; voted-invalid entries are returned but do not become the next
/// previous pin. Throws ChainBrokenError at the first missing key.
std::vector<LocatedPin> pin_chain_verify(const PinningContract& contract, const Digest256& sidechain_id,
                                         ByteView secret, std::size_t expected_count);
std::vector<LocatedPin> pin_chain_verify(const WorldState& state, const ContractId& pinning,
                                         const Digest256& sidechain_id, ByteView secret,
                                         std::size_t expected_count);

}  // namespace eps::pinning
