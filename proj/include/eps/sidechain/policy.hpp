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
#include <string>
#include <string_view>
#include <vector>

#include "eps/crypto/bytes.hpp"

namespace eps::sidechain {

enum class ApiClass : std::uint8_t { admin, view, transact, deploy, transfer };
enum class TxType : std::uint8_t { deploy, update, transfer };

std::string_view to_string(ApiClass c);
std::string_view to_string(TxType t);
std::optional<ApiClass> parse_api_class(std::string_view s);
std::optional<TxType> parse_tx_type(std::string_view s);

/// Node permissioning. Text form, one setting per line:
///
///   api.<participant>         = admin, view, transact, deploy, transfer
///   accounts.whitelist        = <hex20>, ...
///   tx.<hex20>                = deploy, update, transfer
///   establish.orgs.whitelist  = <domain>, ...      (also .blacklist)
///   establish.api.whitelist   = <participant>, ... (also .blacklist)
///   participation.masked      = true | false
///
/// Setting a key replaces its previous value.
struct PermissionPolicy {
  std::map<std::string, std::set<ApiClass>, std::less<>> api_acl;
  std::set<Address> account_whitelist;
  std::map<Address, std::set<TxType>> tx_permissions;
  std::set<std::string, std::less<>> establish_whitelist;
  std::set<std::string, std::less<>> establish_blacklist;
  std::set<std::string, std::less<>> establish_api_whitelist;
  std::set<std::string, std::less<>> establish_api_blacklist;
  bool masked_participation = false;

  /// Throws parse-error on an unknown key or value.
  void set(std::string_view key, const std::vector<std::string>& values);
  static PermissionPolicy parse(std::string_view text);
  /// Grants `participant` every API class and `account` every tx type.
  void grant_all(std::string_view participant, const Address& account);
};

/// Splits "a, b,c" into trimmed, non-empty items.
std::vector<std::string> split_list(std::string_view text);

bool check_api_permission(const PermissionPolicy& p, std::string_view participant, ApiClass c);
bool check_tx_permission(const PermissionPolicy& p, const Address& sender, TxType t);
/// Blacklists win; an empty whitelist admits nobody.
bool evaluate_establishment_request(const PermissionPolicy& p, std::string_view requester_org,
                                    std::string_view requester_participant);
/// The initiator-side check: participant lists only.
bool may_initiate_establishment(const PermissionPolicy& p, std::string_view participant);

}  // namespace eps::sidechain
