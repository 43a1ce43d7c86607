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

#include "eps/sidechain/policy.hpp"

#include "eps/error.hpp"

namespace eps::sidechain {
namespace {

constexpr std::string_view kApiNames[] = {"admin", "view", "transact", "deploy", "transfer"};
constexpr std::string_view kTxNames[] = {"deploy", "update", "transfer"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename Enum>
std::set<Enum> parse_set(const std::vector<std::string>& values, std::optional<Enum> (*parse)(std::string_view),
                         std::string_view key) {
  std::set<Enum> out;
  for (const auto& v : values) {
    auto e = parse(v);
    if (!e) fail(ErrorCode::parse_error, "unknown value '" + v + "' for " + std::string(key));
    out.insert(*e);
  }
  return out;
}

Address parse_address(std::string_view hex) {
  try {
    return Address::from_hex(hex);
  } catch (const Error&) {
    fail(ErrorCode::parse_error, "bad address '" + std::string(hex) + "'");
  }
}

}  // namespace

std::string_view to_string(ApiClass c) { return kApiNames[static_cast<int>(c)]; }
std::string_view to_string(TxType t) { return kTxNames[static_cast<int>(t)]; }

std::optional<ApiClass> parse_api_class(std::string_view s) {
  for (int i = 0; i < 5; ++i) {
    if (kApiNames[i] == s) return static_cast<ApiClass>(i);
  }
  return std::nullopt;
}

std::optional<TxType> parse_tx_type(std::string_view s) {
  for (int i = 0; i < 3; ++i) {
    if (kTxNames[i] == s) return static_cast<TxType>(i);
  }
  return std::nullopt;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = trim(text.substr(0, comma));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

void PermissionPolicy::set(std::string_view key, const std::vector<std::string>& values) {
  auto as_strings = [&] { return std::set<std::string, std::less<>>(values.begin(), values.end()); };
  if (key.starts_with("api.") && key.size() > 4) {
    api_acl[std::string(key.substr(4))] = parse_set<ApiClass>(values, parse_api_class, key);
  } else if (key == "accounts.whitelist") {
    account_whitelist.clear();
    for (const auto& v : values) account_whitelist.insert(parse_address(v));
  } else if (key.starts_with("tx.") && key.size() > 3) {
    tx_permissions[parse_address(key.substr(3))] = parse_set<TxType>(values, parse_tx_type, key);
  } else if (key == "establish.orgs.whitelist") {
    establish_whitelist = as_strings();
  } else if (key == "establish.orgs.blacklist") {
    establish_blacklist = as_strings();
  } else if (key == "establish.api.whitelist") {
    establish_api_whitelist = as_strings();
  } else if (key == "establish.api.blacklist") {
    establish_api_blacklist = as_strings();
  } else if (key == "participation.masked") {
    if (values.size() != 1 || (values[0] != "true" && values[0] != "false")) {
      fail(ErrorCode::parse_error, "participation.masked takes true or false");
    }
    masked_participation = values[0] == "true";
  } else {
    fail(ErrorCode::parse_error, "unknown policy key '" + std::string(key) + "'");
  }
}

PermissionPolicy PermissionPolicy::parse(std::string_view text) {
  PermissionPolicy p;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    auto line = trim(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": expected key = values");
    p.set(trim(line.substr(0, eq)), split_list(line.substr(eq + 1)));
  }
  return p;
}

void PermissionPolicy::grant_all(std::string_view participant, const Address& account) {
  api_acl[std::string(participant)] = {ApiClass::admin, ApiClass::view, ApiClass::transact, ApiClass::deploy,
                                       ApiClass::transfer};
  account_whitelist.insert(account);
  tx_permissions[account] = {TxType::deploy, TxType::update, TxType::transfer};
}

bool check_api_permission(const PermissionPolicy& p, std::string_view participant, ApiClass c) {
  auto it = p.api_acl.find(participant);
  return it != p.api_acl.end() && it->second.contains(c);
}

bool check_tx_permission(const PermissionPolicy& p, const Address& sender, TxType t) {
  if (!p.account_whitelist.contains(sender)) return false;
  auto it = p.tx_permissions.find(sender);
  return it != p.tx_permissions.end() && it->second.contains(t);
}

bool evaluate_establishment_request(const PermissionPolicy& p, std::string_view requester_org,
                                    std::string_view requester_participant) {
  if (p.establish_blacklist.contains(requester_org)) return false;
  if (p.establish_api_blacklist.contains(requester_participant)) return false;
  return p.establish_whitelist.contains(requester_org) && p.establish_api_whitelist.contains(requester_participant);
}

bool may_initiate_establishment(const PermissionPolicy& p, std::string_view participant) {
  return !p.establish_api_blacklist.contains(participant) && p.establish_api_whitelist.contains(participant);
}

}  // namespace eps::sidechain
