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

#include "eps/era/contracts.hpp"

namespace eps::era {
namespace {

constexpr std::uint8_t kHasDelegate = 1;
constexpr std::uint8_t kHasOrgInfo = 2;

Bytes kind_value(ContractKind k) { return {static_cast<std::uint8_t>(k)}; }

ContractKind read_kind(const KvMap& kv) {
  auto it = kv.find(kv_key("kind"));
  if (it == kv.end() || it->second.size() != 1) fail(ErrorCode::malformed_snapshot, "missing kind");
  return static_cast<ContractKind>(it->second[0]);
}

Address read_owner(const KvMap& kv) {
  auto it = kv.find(kv_key("owner"));
  if (it == kv.end()) fail(ErrorCode::malformed_snapshot, "missing owner");
  return Address::from_view(it->second);
}

}  // namespace

Bytes EraRecord::encode() const {
  ByteWriter w;
  std::uint8_t flags = (delegate_era ? kHasDelegate : 0) | (org_info ? kHasOrgInfo : 0);
  w.fixed(domain_hash).u8(flags);
  if (delegate_era) w.fixed(*delegate_era);
  if (org_info) w.fixed(*org_info);
  w.fixed(owner);
  return w.take();
}

EraRecord EraRecord::decode(ByteView data) {
  ByteReader r(data);
  EraRecord rec;
  rec.domain_hash = r.fixed<Digest256>();
  auto flags = r.u8();
  if (flags & ~(kHasDelegate | kHasOrgInfo)) fail(ErrorCode::malformed_input, "unknown record flags");
  if (flags & kHasDelegate) rec.delegate_era = r.fixed<ContractId>();
  if (flags & kHasOrgInfo) rec.org_info = r.fixed<ContractId>();
  rec.owner = r.fixed<Address>();
  r.expect_end();
  return rec;
}

Bytes encode_set_record(const EraRecord& record) { return record.encode(); }

Bytes encode_orginfo_set(const Digest256& key, ByteView value) {
  return concat({key.view(), value});
}

EraContract::EraContract(ContractKind kind, const Address& owner) : kind_(kind), owner_(owner) {
  if (kind != ContractKind::root_era && kind != ContractKind::delegate_era) {
    fail(ErrorCode::unsupported_contract, "not an ERA kind");
  }
}

void EraContract::set_record(const Address& caller, const EraRecord& record) {
  if (!record.delegate_era && !record.org_info) {
    fail(ErrorCode::invalid_record, "record lists neither a delegate ERA nor an OrgInfo contract");
  }
  auto it = records_.find(record.domain_hash);
  bool authorized = caller == owner_ || (it != records_.end() && it->second.owner == caller);
  if (!authorized) fail(ErrorCode::unauthorized_caller, caller.hex() + " may not write this record");
  records_[record.domain_hash] = record;
}

std::optional<EraRecord> EraContract::get_record(const Digest256& domain_hash) const {
  auto it = records_.find(domain_hash);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

Bytes EraContract::call(const CallContext& ctx, std::string_view name, std::span<const Bytes> args) {
  if (name == "setRecord") {
    set_record(ctx.sender, EraRecord::decode(single_arg(args, name)));
    return {};
  }
  fail(ErrorCode::unknown_call, "ERA has no call '" + std::string(name) + "'");
}

Bytes EraContract::query(std::string_view name, std::span<const Bytes> args) const {
  if (name == "getRecord") {
    auto rec = get_record(Digest256::from_view(single_arg(args, name)));
    return rec ? rec->encode() : Bytes{};
  }
  if (name == "owner") return owner_.to_vector();
  fail(ErrorCode::unknown_call, "ERA has no query '" + std::string(name) + "'");
}

KvMap EraContract::encode() const {
  KvMap kv;
  kv[kv_key("kind")] = kind_value(kind_);
  kv[kv_key("owner")] = owner_.to_vector();
  for (const auto& [h, rec] : records_) kv[kv_key("r/", h.view())] = rec.encode();
  return kv;
}

std::unique_ptr<EraContract> EraContract::decode(const KvMap& kv) {
  auto c = std::make_unique<EraContract>(read_kind(kv), read_owner(kv));
  const auto prefix = kv_key("r/");
  for (const auto& [k, v] : kv) {
    if (k.size() == prefix.size() + 32 && std::equal(prefix.begin(), prefix.end(), k.begin())) {
      auto rec = EraRecord::decode(v);
      c->records_[rec.domain_hash] = rec;
    }
  }
  return c;
}

OrgInfoContract::OrgInfoContract(const Address& owner) : owner_(owner) {}

void OrgInfoContract::set(const Address& caller, const Digest256& key, ByteView value) {
  if (caller != owner_) fail(ErrorCode::unauthorized_caller, caller.hex() + " does not own this OrgInfo");
  values_[key] = Bytes(value.begin(), value.end());
}

std::optional<Bytes> OrgInfoContract::get(const Digest256& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

Bytes OrgInfoContract::call(const CallContext& ctx, std::string_view name, std::span<const Bytes> args) {
  if (name == "set") {
    ByteReader r(single_arg(args, name));
    auto key = r.fixed<Digest256>();
    set(ctx.sender, key, r.rest());
    return {};
  }
  fail(ErrorCode::unknown_call, "OrgInfo has no call '" + std::string(name) + "'");
}

Bytes OrgInfoContract::query(std::string_view name, std::span<const Bytes> args) const {
  if (name == "get") {
    auto v = get(Digest256::from_view(single_arg(args, name)));
    if (!v) return {0};
    Bytes out{1};
    out.insert(out.end(), v->begin(), v->end());
    return out;
  }
  if (name == "owner") return owner_.to_vector();
  fail(ErrorCode::unknown_call, "OrgInfo has no query '" + std::string(name) + "'");
}

KvMap OrgInfoContract::encode() const {
  KvMap kv;
  kv[kv_key("kind")] = kind_value(ContractKind::orginfo);
  kv[kv_key("owner")] = owner_.to_vector();
  for (const auto& [k, v] : values_) kv[kv_key("v/", k.view())] = v;
  return kv;
}

std::unique_ptr<OrgInfoContract> OrgInfoContract::decode(const KvMap& kv) {
  auto c = std::make_unique<OrgInfoContract>(read_owner(kv));
  const auto prefix = kv_key("v/");
  for (const auto& [k, v] : kv) {
    if (k.size() == prefix.size() + 32 && std::equal(prefix.begin(), prefix.end(), k.begin())) {
      c->values_[Digest256::from_view(ByteView(k).subspan(prefix.size()))] = v;
    }
  }
  return c;
}

}  // namespace eps::era
