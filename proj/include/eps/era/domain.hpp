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

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "eps/crypto/bytes.hpp"

namespace eps::era {

/// A dotted domain of 1..63-character labels drawn from [a-z0-9-].
/// Uppercase is rejected rather than folded; callers lowercase first.
class DomainName {
 public:
  /// Throws invalid-domain.
  static DomainName parse(std::string_view text);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& text() const { return text_; }

  /// Suffix domains from most specific (the name itself) to least (the
  /// top-level label). A k-label name has exactly k suffixes.
  std::vector<DomainName> suffixes() const;

  auto operator<=>(const DomainName& o) const { return text_ <=> o.text_; }
  bool operator==(const DomainName& o) const { return text_ == o.text_; }

 private:
  std::vector<std::string> labels_;
  std::string text_;
};

/// ERA lookup key: keccak256 of the forward dotted form.
Digest256 domain_hash(const DomainName& d);

/// OrgInfo name key: keccak256 of the reverse-domain-ordered name string,
/// e.g. "org.ethereum.enode". Throws invalid-name on an empty name.
Digest256 orginfo_name_key(std::string_view name);

// Standardised OrgInfo names.
inline constexpr std::string_view kEnodeName = "org.ethereum.enode";
inline constexpr std::string_view kEncPubkeyName = "org.ethereum.enc-pubkey";
inline constexpr std::string_view kCreatorEndpointName = "org.ethereum.sidechain-creator-endpoint";

}  // namespace eps::era
