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

#include <map>
#include <optional>

#include "eps/ledger/contract.hpp"

namespace eps::era {

/// One registry row: domain hash -> delegate ERA and/or OrgInfo contract.
struct EraRecord {
  Digest256 domain_hash;
  std::optional<ContractId> delegate_era;
  std::optional<ContractId> org_info;
  Address owner;

  /// domain_hash ++ u8 flags (1 = delegate, 2 = orginfo) ++ [delegate] ++
  /// [orginfo] ++ owner.
  Bytes encode() const;
  static EraRecord decode(ByteView data);

  bool operator==(const EraRecord&) const = default;
};

/// Root or delegate Ethereum Registration Authority.
///
/// Calls: "setRecord"(EraRecord). Queries: "getRecord"(domain hash) returns
/// the encoded record or an empty blob. Listing a new domain requires the
/// contract owner; updating a row may also be done by the row's owner.
class EraContract final : public Contract {
 public:
  EraContract(ContractKind kind, const Address& owner);

  void set_record(const Address& caller, const EraRecord& record);
  std::optional<EraRecord> get_record(const Digest256& domain_hash) const;

  const Address& owner() const { return owner_; }
  std::size_t size() const { return records_.size(); }

  ContractKind kind() const override { return kind_; }
  Bytes call(const CallContext& ctx, std::string_view name, std::span<const Bytes> args) override;
  Bytes query(std::string_view name, std::span<const Bytes> args) const override;
  KvMap encode() const override;
  std::unique_ptr<Contract> clone() const override { return std::make_unique<EraContract>(*this); }

  static std::unique_ptr<EraContract> decode(const KvMap& kv);

 private:
  ContractKind kind_;
  Address owner_;
  std::map<Digest256, EraRecord> records_;
};

/// Organisation-owned name -> value map. Names are orginfo_name_key digests.
///
/// Calls: "set"(key ++ value). Queries: "get"(key) returns u8 present ++
/// value.
class OrgInfoContract final : public Contract {
 public:
  explicit OrgInfoContract(const Address& owner);

  void set(const Address& caller, const Digest256& key, ByteView value);
  std::optional<Bytes> get(const Digest256& key) const;

  const Address& owner() const { return owner_; }

  ContractKind kind() const override { return ContractKind::orginfo; }
  Bytes call(const CallContext& ctx, std::string_view name, std::span<const Bytes> args) override;
  Bytes query(std::string_view name, std::span<const Bytes> args) const override;
  KvMap encode() const override;
  std::unique_ptr<Contract> clone() const override { return std::make_unique<OrgInfoContract>(*this); }

  static std::unique_ptr<OrgInfoContract> decode(const KvMap& kv);

 private:
  Address owner_;
  std::map<Digest256, Bytes> values_;
};

// Argument encoders for ledger transactions.
Bytes encode_set_record(const EraRecord& record);
Bytes encode_orginfo_set(const Digest256& key, ByteView value);

}  // namespace eps::era
