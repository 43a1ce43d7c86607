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

#include "eps/era/domain.hpp"

#include "eps/crypto/keccak.hpp"

namespace eps::era {
namespace {

bool valid_label_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
}

std::string join(const std::vector<std::string>& labels, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < labels.size(); ++i) {
    if (i > from) out.push_back('.');
    out += labels[i];
  }
  return out;
}

}  // namespace

DomainName DomainName::parse(std::string_view text) {
  if (text.empty()) fail(ErrorCode::invalid_domain, "empty domain");
  DomainName d;
  std::size_t start = 0;
  while (true) {
    auto dot = text.find('.', start);
    auto label = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    if (label.empty()) fail(ErrorCode::invalid_domain, "empty label in '" + std::string(text) + "'");
    if (label.size() > 63) fail(ErrorCode::invalid_domain, "label longer than 63 characters");
    for (char c : label) {
      if (!valid_label_char(c)) {
        fail(ErrorCode::invalid_domain,
             "invalid character '" + std::string(1, c) + "' in '" + std::string(text) + "'");
      }
    }
    d.labels_.emplace_back(label);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  d.text_ = std::string(text);
  return d;
}

std::vector<DomainName> DomainName::suffixes() const {
  std::vector<DomainName> out;
  out.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    DomainName s;
    s.labels_.assign(labels_.begin() + static_cast<std::ptrdiff_t>(i), labels_.end());
    s.text_ = join(labels_, i);
    out.push_back(std::move(s));
  }
  return out;
}

Digest256 domain_hash(const DomainName& d) { return keccak256(d.text()); }

Digest256 orginfo_name_key(std::string_view name) {
  if (name.empty()) fail(ErrorCode::invalid_name, "empty OrgInfo name");
  return keccak256(name);
}

}  // namespace eps::era
