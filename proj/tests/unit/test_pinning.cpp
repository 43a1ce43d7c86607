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

#include "eps/crypto/keccak.hpp"
#include "eps/crypto/masking.hpp"
#include "eps/crypto/prng.hpp"
#include "eps/pinning/pinning.hpp"
#include "reference_keccak.hpp"

using namespace eps;
using namespace eps::pinning;

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

CallContext at(const Address& who, std::uint64_t block) { return {who, block}; }

// A guardian posting a chain of pins by hand, independent of the network.
struct Chain {
  Digest256 id;
  std::string secret;
  PrngState prng;
  Digest256 previous;
  std::vector<Digest256> keys;
  std::vector<Digest256> values;

  Chain(std::string_view name, std::string s) : id(keccak256(name)), secret(std::move(s)), prng(prng_seed(as_bytes(secret))) {}

  Digest256 post(PinningContract& c, const Address& poster, std::uint64_t block, const Digest256& pin,
                 bool chain_from_it = true) {
    auto [value, next] = prng_next(prng);
    auto key = compute_map_key(id, previous, value);
    c.post_pin(at(poster, block), key, pin);
    prng = next;
    keys.push_back(key);
    values.push_back(value);
    if (chain_from_it) previous = pin;
    return key;
  }
};

Digest256 pin_of(int i) { return keccak256(std::string_view("state-" + std::to_string(i))); }

}  // namespace

TEST_CASE("map key is keccak of the 96-byte concatenation") {
  auto id = keccak256(std::string_view("id"));
  auto prev = keccak256(std::string_view("prev"));
  auto v = keccak256(std::string_view("v"));
  auto want = eps::testing::ReferenceKeccak::hash(concat({id.view(), prev.view(), v.view()}));
  CHECK(compute_map_key(id, prev, v).hex() == eps::testing::hex(want));
  CHECK(compute_map_key(id, v, prev) != compute_map_key(id, prev, v));
}

TEST_CASE("registration rules") {
  PinningContract c;
  auto id = keccak256(std::string_view("sc"));
  CHECK(code_of([&] { c.register_sidechain(at(addr(1), 1), id, {}, {}, {}); }) == ErrorCode::empty_participants);
  CHECK(code_of([&] { c.register_sidechain(at(addr(9), 1), id, {addr(1)}, {}, {}); }) ==
        ErrorCode::caller_not_member);
  CHECK(code_of([&] { c.register_sidechain(at(addr(1), 1), id, {addr(1)}, {}, VotingConfig{0, 1, 2}); }) ==
        ErrorCode::invalid_voting_config);
  CHECK(code_of([&] { c.register_sidechain(at(addr(1), 1), id, {addr(1)}, {}, VotingConfig{5, 3, 2}); }) ==
        ErrorCode::invalid_voting_config);
  c.register_sidechain(at(addr(1), 1), id, {addr(1), addr(2)}, {}, {});
  CHECK(c.sidechain(id)->unmasked.size() == 2);
  CHECK(code_of([&] { c.register_sidechain(at(addr(1), 2), id, {addr(1)}, {}, {}); }) ==
        ErrorCode::duplicate_sidechain);
}

TEST_CASE("chain verification walks the map keys") {
  PinningContract c;
  Chain a("a", "secret-a");
  Chain b("b", "secret-b");
  for (int i = 0; i < 4; ++i) {
    a.post(c, addr(1), 10 + i, pin_of(i));
    if (i < 2) b.post(c, addr(2), 20 + i, pin_of(100 + i));
  }
  auto got = pin_chain_verify(c, a.id, as_bytes(a.secret), 4);
  REQUIRE(got.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(got[i].index == i);
    CHECK(got[i].map_key == a.keys[i]);
    CHECK(got[i].pin == pin_of(static_cast<int>(i)));
    CHECK(got[i].prng_value == a.values[i]);
  }
  CHECK(got[0].previous_pin.is_zero());
  CHECK(got[2].previous_pin == pin_of(1));
  CHECK(pin_chain_verify(c, b.id, as_bytes(b.secret), 2).size() == 2);

  try {
    pin_chain_verify(c, a.id, as_bytes(a.secret), 5);
    FAIL("expected chain break");
  } catch (const ChainBrokenError& e) {
    CHECK(e.index() == 4);
    CHECK(e.code() == ErrorCode::chain_broken);
  }
  try {
    pin_chain_verify(c, a.id, as_bytes("wrong"), 1);
    FAIL("expected chain break");
  } catch (const ChainBrokenError& e) {
    CHECK(e.index() == 0);
  }
  CHECK(pin_chain_verify(c, a.id, as_bytes(a.secret), 0).empty());
}

TEST_CASE("post pin rejects an occupied key") {
  PinningContract c;
  auto k = keccak256(std::string_view("k"));
  c.post_pin(at(addr(1), 1), k, pin_of(0));
  CHECK(code_of([&] { c.post_pin(at(addr(2), 2), k, pin_of(1)); }) == ErrorCode::key_occupied);
  CHECK(c.pin(k)->posted_at == 1);
}

TEST_CASE("contest, vote and finalize") {
  PinningContract c;
  Chain ch("sc", "s");
  c.register_sidechain(at(addr(1), 1), ch.id, {addr(1), addr(2), addr(3)}, {}, {});
  ch.post(c, addr(1), 2, pin_of(0));
  ch.post(c, addr(1), 3, pin_of(1));

  CHECK(code_of([&] { c.contest_pin(at(addr(2), 4), keccak256(std::string_view("?")), ch.values[1], ch.id); }) ==
        ErrorCode::unknown_previous_key);
  CHECK(code_of([&] { c.contest_pin(at(addr(2), 4), ch.keys[0], ch.values[0], ch.id); }) ==
        ErrorCode::derived_key_not_found);
  auto p = c.contest_pin(at(addr(2), 4), ch.keys[0], ch.values[1], ch.id);
  CHECK(c.pin(ch.keys[1])->status == PinStatus::contested);
  CHECK(c.proposal(p)->deadline == 9);
  CHECK(code_of([&] { c.contest_pin(at(addr(3), 4), ch.keys[0], ch.values[1], ch.id); }) ==
        ErrorCode::already_contested);

  c.cast_vote(at(addr(1), 5), p, true);
  CHECK(code_of([&] { c.cast_vote(at(addr(1), 5), p, false); }) == ErrorCode::already_voted);
  CHECK(code_of([&] { c.cast_vote(at(addr(7), 5), p, true); }) == ErrorCode::not_unmasked);
  CHECK(code_of([&] { c.finalize(at(addr(1), 9), p); }) == ErrorCode::voting_open);
  c.cast_vote(at(addr(2), 9), p, true);
  CHECK(code_of([&] { c.cast_vote(at(addr(3), 10), p, true); }) == ErrorCode::deadline_passed);
  CHECK(c.finalize(at(addr(3), 10), p));
  CHECK(c.pin(ch.keys[1])->status == PinStatus::voted_invalid);
  CHECK(code_of([&] { c.finalize(at(addr(3), 11), p); }) == ErrorCode::already_finalized);
  CHECK(code_of([&] { c.cast_vote(at(addr(3), 11), 99, true); }) == ErrorCode::unknown_proposal);

  // The first pin contested with a zero previous key; one yes of three fails.
  auto q = c.contest_pin(at(addr(3), 12), Digest256{}, ch.values[0], ch.id);
  c.cast_vote(at(addr(3), 13), q, true);
  CHECK_FALSE(c.finalize(at(addr(1), 18), q));
  CHECK(c.pin(ch.keys[0])->status == PinStatus::voted_valid);
}

TEST_CASE("threshold is strict") {
  PinningContract c;
  auto id = keccak256(std::string_view("sc"));
  c.register_sidechain(at(addr(1), 1), id, {addr(1), addr(2), addr(3), addr(4)}, {}, {});
  auto p = c.propose(at(addr(1), 2), id, ProposalKind::add_unmasked, addr(5).view());
  c.cast_vote(at(addr(1), 2), p, true);
  c.cast_vote(at(addr(2), 2), p, true);
  CHECK_FALSE(c.finalize(at(addr(1), 8), p));  // 2/4 is not > 1/2
  CHECK_FALSE(c.sidechain(id)->unmasked.contains(addr(5)));

  auto q = c.propose(at(addr(1), 9), id, ProposalKind::add_unmasked, addr(5).view());
  for (std::uint8_t v = 1; v <= 3; ++v) c.cast_vote(at(addr(v), 9), q, true);
  CHECK(c.finalize(at(addr(1), 15), q));
  CHECK(c.sidechain(id)->unmasked.contains(addr(5)));
}

TEST_CASE("masked participants must unmask to act") {
  PinningContract c;
  auto id = keccak256(std::string_view("sc"));
  auto salt = keccak256(std::string_view("salt"));
  c.register_sidechain(at(addr(1), 1), id, {addr(1)}, {mask_participant(addr(2), salt)}, {});
  auto p = c.propose(at(addr(1), 2), id, ProposalKind::change_voting_config, VotingConfig{7, 2, 3}.encode());
  CHECK(code_of([&] { c.cast_vote(at(addr(2), 3), p, true); }) == ErrorCode::not_unmasked);
  CHECK(code_of([&] { c.unmask(at(addr(2), 3), id, keccak256(std::string_view("pepper"))); }) ==
        ErrorCode::no_matching_mask);
  CHECK(code_of([&] { c.unmask(at(addr(3), 3), id, salt); }) == ErrorCode::no_matching_mask);
  c.unmask(at(addr(2), 3), id, salt);
  CHECK(c.sidechain(id)->masked.empty());
  c.cast_vote(at(addr(2), 4), p, true);
  c.cast_vote(at(addr(1), 4), p, true);
  CHECK(c.finalize(at(addr(1), 8), p));
  CHECK(c.sidechain(id)->voting == VotingConfig{7, 2, 3});
}

TEST_CASE("proposal subjects are validated") {
  PinningContract c;
  auto id = keccak256(std::string_view("sc"));
  c.register_sidechain(at(addr(1), 1), id, {addr(1)}, {}, {});
  CHECK(code_of([&] { c.propose(at(addr(1), 2), id, ProposalKind::add_unmasked, Bytes(3)); }) ==
        ErrorCode::invalid_proposal);
  CHECK(code_of([&] { c.propose(at(addr(1), 2), id, ProposalKind::pin_validity, Bytes(32)); }) ==
        ErrorCode::invalid_proposal);
  CHECK(code_of([&] { c.propose(at(addr(1), 2), id, ProposalKind::change_voting_config,
                                VotingConfig{0, 1, 2}.encode()); }) == ErrorCode::invalid_voting_config);
  CHECK(code_of([&] { c.propose(at(addr(2), 2), id, ProposalKind::add_unmasked, addr(2).view()); }) ==
        ErrorCode::not_unmasked);
  CHECK(code_of([&] { c.propose(at(addr(1), 2), keccak256(std::string_view("x")), ProposalKind::add_unmasked,
                                addr(2).view()); }) == ErrorCode::sidechain_not_registered);
}

TEST_CASE("pin entries carry no sidechain attribution and survive encode/decode") {
  PinningContract c;
  Chain ch("sc", "s");
  c.register_sidechain(at(addr(1), 1), ch.id, {addr(1)}, {}, {});
  ch.post(c, addr(1), 2, pin_of(0));
  auto entry = *c.pin(ch.keys[0]);
  auto enc = entry.encode();
  CHECK(enc.size() == 32 + 8 + 1);
  CHECK(std::search(enc.begin(), enc.end(), ch.id.bytes.begin(), ch.id.bytes.end()) == enc.end());
  auto copy = PinningContract::decode(c.encode());
  CHECK(copy->encode() == c.encode());
  CHECK(pin_chain_verify(*copy, ch.id, as_bytes("s"), 1).size() == 1);
}

TEST_CASE("a voted-invalid pin is skipped for linkage") {
  PinningContract c;
  Chain ch("sc", "s");
  c.register_sidechain(at(addr(1), 1), ch.id, {addr(1)}, {}, {});
  ch.post(c, addr(1), 2, pin_of(0));
  ch.post(c, addr(1), 3, pin_of(1), false);  // bad pin; guardian will not chain from it
  auto p = c.contest_pin(at(addr(1), 4), ch.keys[0], ch.values[1], ch.id);
  c.cast_vote(at(addr(1), 4), p, true);
  CHECK(c.finalize(at(addr(1), 10), p));
  ch.post(c, addr(1), 11, pin_of(2));
  auto got = pin_chain_verify(c, ch.id, as_bytes("s"), 3);
  CHECK(got[1].status == PinStatus::voted_invalid);
  CHECK(got[2].previous_pin == pin_of(0));
}
