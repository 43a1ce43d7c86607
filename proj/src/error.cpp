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

#include "eps/error.hpp"

namespace eps {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_seed: return "invalid-seed";
    case ErrorCode::invalid_key: return "invalid-key";
    case ErrorCode::malformed_input: return "malformed-input";
    case ErrorCode::tamper_detected: return "tamper-detected";
    case ErrorCode::unsupported_contract: return "unsupported-contract";
    case ErrorCode::nonce_gap: return "nonce-gap";
    case ErrorCode::unknown_target: return "unknown-target";
    case ErrorCode::unknown_call: return "unknown-call";
    case ErrorCode::bad_arguments: return "bad-arguments";
    case ErrorCode::malformed_snapshot: return "malformed-snapshot";
    case ErrorCode::invalid_domain: return "invalid-domain";
    case ErrorCode::invalid_name: return "invalid-name";
    case ErrorCode::unauthorized_caller: return "unauthorized-caller";
    case ErrorCode::invalid_record: return "invalid-record";
    case ErrorCode::configuration: return "configuration";
    case ErrorCode::duplicate_sidechain: return "duplicate-sidechain";
    case ErrorCode::empty_participants: return "empty-participants";
    case ErrorCode::caller_not_member: return "caller-not-member";
    case ErrorCode::key_occupied: return "key-occupied";
    case ErrorCode::unknown_previous_key: return "unknown-previous-key";
    case ErrorCode::derived_key_not_found: return "derived-key-not-found";
    case ErrorCode::already_contested: return "already-contested";
    case ErrorCode::sidechain_not_registered: return "sidechain-not-registered";
    case ErrorCode::no_matching_mask: return "no-matching-mask";
    case ErrorCode::not_unmasked: return "not-unmasked";
    case ErrorCode::deadline_passed: return "deadline-passed";
    case ErrorCode::voting_open: return "voting-open";
    case ErrorCode::already_finalized: return "already-finalized";
    case ErrorCode::already_voted: return "already-voted";
    case ErrorCode::unknown_proposal: return "unknown-proposal";
    case ErrorCode::invalid_proposal: return "invalid-proposal";
    case ErrorCode::invalid_voting_config: return "invalid-voting-config";
    case ErrorCode::chain_broken: return "chain-broken";
    case ErrorCode::unknown_contract: return "unknown-contract";
    case ErrorCode::contract_exists: return "contract-exists";
    case ErrorCode::guard_failed: return "guard-failed";
    case ErrorCode::wrong_sidechain: return "wrong-sidechain";
    case ErrorCode::pending_transactions: return "pending-transactions";
    case ErrorCode::unknown_sidechain: return "unknown-sidechain";
    case ErrorCode::permission_denied: return "permission-denied";
    case ErrorCode::sidechain_archived: return "sidechain-archived";
    case ErrorCode::unresolved_domain: return "unresolved-domain";
    case ErrorCode::establishment_rejected: return "establishment-rejected";
    case ErrorCode::initiator_not_authorized: return "initiator-not-authorized";
    case ErrorCode::node_not_listed: return "node-not-listed";
    case ErrorCode::stale_block_reference: return "stale-block-reference";
    case ErrorCode::unauthorized_reader: return "unauthorized-reader";
    case ErrorCode::livelock: return "livelock";
    case ErrorCode::unknown_node: return "unknown-node";
    case ErrorCode::consensus_failure: return "consensus-failure";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::assertion_failed: return "assertion-failed";
    case ErrorCode::missing_requirement: return "missing-requirement";
  }
  return "unknown";
}

std::optional<ErrorCode> parse_error_code(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(ErrorCode::missing_requirement); ++i) {
    auto code = static_cast<ErrorCode>(i);
    if (to_string(code) == name) return code;
  }
  return std::nullopt;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ChainBrokenError::ChainBrokenError(std::size_t index)
    : Error(ErrorCode::chain_broken, "first missing map key at index " + std::to_string(index)),
      index_(index) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace eps
