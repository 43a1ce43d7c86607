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

#include <random>

#include "eps/crypto/aead.hpp"
#include "eps/crypto/keccak.hpp"
#include "eps/crypto/masking.hpp"
#include "eps/crypto/prng.hpp"
#include "eps/error.hpp"
#include "reference_keccak.hpp"

using namespace eps;
using eps::testing::ReferenceKeccak;

namespace {

Bytes oracle(const Bytes& data) {
  auto d = ReferenceKeccak::hash(data);
  return {d.begin(), d.end()};
}

Bytes random_bytes(std::mt19937_64& rng, std::size_t n) {
  Bytes out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng());
  return out;
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

}  // namespace

// Frozen outputs of an independent Keccak-256 (original padding) build.
TEST_CASE("keccak256 frozen vectors") {
  CHECK(keccak256(std::string_view("")).hex() ==
        "c5d2460186f7233c927e7db2dcc703c0e500b653ca82273b7bfad8045d85a470");
  CHECK(keccak256(std::string_view("abc")).hex() ==
        "4e03657aea45a94fc7d47ba826c8d667c0d1e6e33a64a036ec44f58fa12d6c45");
  CHECK(keccak256(Bytes(52, 0)).hex() == "a86d54e9aab41ae5e520ff0062ff1b4cbd0b2192bb01080a058bb170d84e6457");
  CHECK(keccak256(std::string_view("org.ethereum.enode")).hex() ==
        "1357b96456399772d2413f43a3095b0b735fc0dc06ffc2ad7d3a5cb6ed3ff113");
  // rate boundary
  CHECK(keccak256(std::string(135, 'a')).hex() == "34367dc248bbd832f4e3e69dfaac2f92638bd0bbd18f2912ba4ef454919cf446");
  CHECK(keccak256(std::string(136, 'a')).hex() == "a6c4d403279fe3e0af03729caada8374b5ca54d8065329a3ebcaeb4b60aa386e");
  CHECK(keccak256(std::string(137, 'a')).hex() == "d869f639c7046b4929fc92a4d988a8b22c55fbadb802c0c66ebcd484f1915f39");
  Bytes cycle;
  for (int r = 0; r < 4; ++r) {
    for (int i = 0; i < 256; ++i) cycle.push_back(static_cast<std::uint8_t>(i));
  }
  CHECK(keccak256(cycle).hex() == "5902e53903be0d0f9656bdbd5b9f0d8c2d815f865645d629eef77f5185f6cd7f");
}

TEST_CASE("reference oracle agrees with the frozen vectors") {
  CHECK(eps::testing::hex(ReferenceKeccak::hash(std::string("abc"))) ==
        "4e03657aea45a94fc7d47ba826c8d667c0d1e6e33a64a036ec44f58fa12d6c45");
  CHECK(eps::testing::hex(ReferenceKeccak::hash(std::string(136, 'a'))) ==
        "a6c4d403279fe3e0af03729caada8374b5ca54d8065329a3ebcaeb4b60aa386e");
}

TEST_CASE("keccak256 matches the oracle across lengths") {
  std::mt19937_64 rng(1);
  for (std::size_t n = 0; n <= 300; n += 7) {
    auto msg = random_bytes(rng, n);
    CHECK(keccak256(msg).to_vector() == oracle(msg));
  }
}

TEST_CASE("streaming update equals one-shot hashing") {
  std::mt19937_64 rng(2);
  auto msg = random_bytes(rng, 500);
  for (std::size_t split : {0u, 1u, 135u, 136u, 137u, 272u, 499u}) {
    Keccak256 h;
    h.update(ByteView(msg).subspan(0, split)).update(ByteView(msg).subspan(split));
    CHECK(h.finalize() == keccak256(msg));
  }
  CHECK(keccak256_concat({as_bytes("ab"), as_bytes("c")}) == keccak256(std::string_view("abc")));
}

TEST_CASE("prng seed and chain") {
  auto s = prng_seed(as_bytes("secret"));
  CHECK(s.counter == 0);
  CHECK(s.state.to_vector() == oracle(to_bytes("secretEPS-PIN-PRNG-V1")));
  auto [v0, s1] = prng_next(s);
  CHECK(v0 == s.state);
  CHECK(s1.counter == 1);
  CHECK(s1.state.to_vector() == oracle(v0.to_vector()));
  auto [v1, s2] = prng_next(s1);
  CHECK(v1 == s1.state);
  CHECK(prng_next(s1).first == v1);  // pure
  CHECK(code_of([] { prng_seed({}); }) == ErrorCode::invalid_seed);
  CHECK(prng_seed(as_bytes("other")).state != s.state);
}

TEST_CASE("masking commits to address and salt") {
  Address a = Address::from_hex("815f947caca7758736a529002510c75d8698ae19");
  Digest256 salt = keccak256(std::string_view("salt"));
  auto m = mask_participant(a, salt);
  CHECK(m.to_vector() == oracle(concat({a.view(), salt.view()})));
  CHECK(verify_unmask(a, salt, m));
  Address other = a;
  other.bytes[0] ^= 1;
  CHECK_FALSE(verify_unmask(other, salt, m));
  Digest256 other_salt = salt;
  other_salt.bytes[31] ^= 0x80;
  CHECK_FALSE(verify_unmask(a, other_salt, m));
}

TEST_CASE("sidechain key derivation") {
  Bytes root(32, 7);
  auto id = keccak256(std::string_view("sc"));
  auto k = derive_sidechain_key(root, id);
  auto want = oracle(concat({root, id.view(), as_bytes("EPS-STATE-KEY-V1")}));
  CHECK(Bytes(k.key.begin(), k.key.end()) == want);
  CHECK(k.sidechain_id == id);
  CHECK(derive_sidechain_key(root, keccak256(std::string_view("sc2"))).key != k.key);
  CHECK(code_of([&] { derive_sidechain_key(Bytes(31, 7), id); }) == ErrorCode::invalid_key);
}

TEST_CASE("aead round trip and tamper detection") {
  auto key = derive_sidechain_key(Bytes(32, 1), keccak256(std::string_view("sc")));
  Nonce nonce{};
  nonce.bytes[0] = 9;
  auto sealed = aead_encrypt(key, nonce, as_bytes("aad"), as_bytes("plaintext"));
  CHECK(sealed.size() == 9 + kAeadTagSize);
  CHECK(to_string(aead_decrypt(key, nonce, as_bytes("aad"), sealed)) == "plaintext");

  auto flipped = sealed;
  flipped[2] ^= 4;
  CHECK(code_of([&] { aead_decrypt(key, nonce, as_bytes("aad"), flipped); }) == ErrorCode::tamper_detected);
  CHECK(code_of([&] { aead_decrypt(key, nonce, as_bytes("AAD"), sealed); }) == ErrorCode::tamper_detected);
  Nonce other = nonce;
  other.bytes[1] = 1;
  CHECK(code_of([&] { aead_decrypt(key, other, as_bytes("aad"), sealed); }) == ErrorCode::tamper_detected);
  auto wrong = derive_sidechain_key(Bytes(32, 1), keccak256(std::string_view("sc2")));
  CHECK(code_of([&] { aead_decrypt(wrong, nonce, as_bytes("aad"), sealed); }) == ErrorCode::tamper_detected);
  CHECK(code_of([&] { aead_decrypt(key, nonce, {}, Bytes(15, 0)); }) == ErrorCode::malformed_input);
}

TEST_CASE("hex helpers") {
  CHECK(to_hex(from_hex("00ff10")) == "00ff10");
  CHECK(code_of([] { from_hex("abc"); }) == ErrorCode::malformed_input);
  CHECK(code_of([] { from_hex("zz"); }) == ErrorCode::malformed_input);
}
