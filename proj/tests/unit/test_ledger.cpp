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


#include <doctest.h>

#include "eps/codec/kv.hpp"
#include "eps/crypto/keccak.hpp"
#include "eps/era/contracts.hpp"
#include "eps/era/domain.hpp"
#include "eps/mgmt/contracts.hpp"
#include "reference_keccak.hpp"

using namespace eps;

namespace {

Address addr(std::uint8_t b) {
  Address a;
  a.bytes.fill(b);
  return a;
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::malformed_input;
}

Bytes set_arg(std::string_view name, std::string_view value) {
  return era::encode_orginfo_set(era::orginfo_name_key(name), as_bytes(value));
}

}  // namespace

TEST_CASE("kv codec round trip is canonical") {
  const KvMap kv{{to_bytes("b"), to_bytes("2")}, {to_bytes("a"), {}}, {to_bytes("c"), Bytes(300, 0xee)}};
  auto enc = encode_kv(kv);
  CHECK(decode_kv(enc) == kv);
  CHECK(encode_kv(decode_kv(enc)) == enc);
  auto truncated = enc;
  truncated.pop_back();
  CHECK(code_of([&] { decode_kv(truncated); }) == ErrorCode::malformed_input);
}

TEST_CASE("byte reader rejects trailing and short input") {
  ByteWriter w;
  w.u8(1).u64(42).blob("xy");
  ByteReader r(w.bytes());
  CHECK(r.u8() == 1);
  CHECK(r.u64() == 42);
  CHECK(r.string() == "xy");
  r.expect_end();
  Bytes extra = w.bytes();
  extra.push_back(0);
  ByteReader r2(extra);
  r2.u8();
  r2.u64();
  r2.blob();
  CHECK(code_of([&] { r2.expect_end(); }) == ErrorCode::malformed_input);
  ByteReader r3(Bytes{1, 2});
  CHECK(code_of([&] { r3.u32(); }) == ErrorCode::malformed_input);
}

TEST_CASE("deploy ids follow the deployer counter") {
  Ledger l;
  auto owner = addr(1);
  auto a = mgmt::deploy_contract(l, "orginfo", {}, owner);
  auto b = mgmt::deploy_contract(l, "orginfo", {}, owner);
  CHECK(a != b);
  auto want = eps::testing::ReferenceKeccak::hash(concat({owner.view(), Bytes(8, 0)}));
  CHECK(Bytes(a.bytes.begin(), a.bytes.end()) == Bytes(want.begin(), want.end()));
  CHECK(code_of([&] { mgmt::deploy_contract(l, "wallet", {}, owner); }) == ErrorCode::unsupported_contract);
}

TEST_CASE("transactions execute in blocks with nonces") {
  Ledger l;
  auto owner = addr(1);
  auto info = mgmt::deploy_contract(l, "orginfo", {}, owner);
  CHECK(l.head().number == 0);

  Transaction tx{owner, info, "set", {set_arg("org.ethereum.enode", "x")}, 0};
  l.submit(tx);
  CHECK(code_of([&] { l.submit(tx); }) == ErrorCode::nonce_gap);
  Transaction next{owner, info, "set", {set_arg("org.ethereum.enode", "y")}, 1};
  l.submit(next);
  CHECK(l.pending_count() == 2);
  const auto& b1 = l.produce_block();
  CHECK(b1.number == 1);
  CHECK(b1.txs.size() == 2);
  CHECK(b1.parent_hash == l.blocks()[0].hash());
  CHECK(l.executed_nonce(owner) == 2);
  auto got = l.read_contract(info, "get", std::vector<Bytes>{era::orginfo_name_key("org.ethereum.enode").to_vector()});
  CHECK(to_string(ByteView(got).subspan(1)) == "y");

  Transaction bad{owner, keccak256(std::string_view("nothing here")), "set", {}, 2};
  CHECK(code_of([&] { l.submit(bad); }) == ErrorCode::unknown_target);
}

TEST_CASE("reverted transaction leaves state untouched") {
  Ledger l;
  auto owner = addr(1);
  auto info = mgmt::deploy_contract(l, "orginfo", {}, owner);
  l.execute(owner, info, "set", {set_arg("k", "v")});
  auto before = l.state().root();
  auto r = l.execute(addr(2), info, "set", {set_arg("k", "stolen")});
  CHECK_FALSE(r.ok());
  CHECK(r.revert_code == ErrorCode::unauthorized_caller);
  CHECK(l.state().root() == before);
  CHECK(l.head().state_root == before);
  auto unknown = l.execute(owner, info, "bogus", {});
  CHECK(unknown.revert_code == ErrorCode::unknown_call);
}

TEST_CASE("snapshot round trip") {
  Ledger l;
  auto owner = addr(1);
  auto root = mgmt::deploy_contract(l, "root-era", {}, owner);
  auto info = mgmt::deploy_contract(l, "orginfo", {}, owner);
  mgmt::deploy_contract(l, "mgmt-pinning", {}, owner);
  l.execute(owner, info, "set", {set_arg("org.ethereum.enode", "enode://x")});
  era::EraRecord rec{era::domain_hash(era::DomainName::parse("x.example")), std::nullopt, info, owner};
  CHECK(l.execute(owner, root, "setRecord", {era::encode_set_record(rec)}).ok());

  auto snap = mgmt::save_snapshot(l.state());
  CHECK(std::string(snap.begin(), snap.begin() + 4) == "EPSL");
  auto loaded = mgmt::load_snapshot(snap);
  CHECK(loaded.root() == l.state().root());
  CHECK(mgmt::save_snapshot(loaded) == snap);

  auto bad = snap;
  bad[0] = 'X';
  CHECK(code_of([&] { mgmt::load_snapshot(bad); }) == ErrorCode::malformed_snapshot);
  auto cut = snap;
  cut.resize(cut.size() - 3);
  CHECK(code_of([&] { mgmt::load_snapshot(cut); }) == ErrorCode::malformed_snapshot);
}
