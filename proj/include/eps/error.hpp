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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eps {

enum class ErrorCode {
  // crypto / codec
  invalid_seed,
  invalid_key,
  malformed_input,
  tamper_detected,
  // management ledger
  unsupported_contract,
  nonce_gap,
  unknown_target,
  unknown_call,
  bad_arguments,
  malformed_snapshot,
  // registration authorities
  invalid_domain,
  invalid_name,
  unauthorized_caller,
  invalid_record,
  configuration,
  // management and pinning
  duplicate_sidechain,
  empty_participants,
  caller_not_member,
  key_occupied,
  unknown_previous_key,
  derived_key_not_found,
  already_contested,
  sidechain_not_registered,
  no_matching_mask,
  not_unmasked,
  deadline_passed,
  voting_open,
  already_finalized,
  already_voted,
  unknown_proposal,
  invalid_proposal,
  invalid_voting_config,
  chain_broken,
  // sidechain runtime
  unknown_contract,
  contract_exists,
  guard_failed,
  wrong_sidechain,
  pending_transactions,
  unknown_sidechain,
  permission_denied,
  sidechain_archived,
  // network harness
  unresolved_domain,
  establishment_rejected,
  initiator_not_authorized,
  node_not_listed,
  stale_block_reference,
  unauthorized_reader,
  livelock,
  unknown_node,
  consensus_failure,
  // tooling
  parse_error,
  assertion_failed,
  missing_requirement,
};

/// Kebab-case name of an error code, e.g. "nonce-gap". Stable; used in
/// revert reasons and CLI output.
std::string_view to_string(ErrorCode code);
/// Inverse of to_string.
std::optional<ErrorCode> parse_error_code(std::string_view name);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by pin chain verification; carries the index of the first map key
/// that could not be located.
class ChainBrokenError : public Error {
 public:
  explicit ChainBrokenError(std::size_t index);

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace eps
