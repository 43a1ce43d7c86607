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

#include "eps/sidechain/persist.hpp"

#include "eps/crypto/keccak.hpp"
#include "eps/io.hpp"

namespace eps::sidechain {
namespace {

constexpr std::string_view kMagic = "EPSS";

}  // namespace

Nonce state_nonce(const Digest256& sidechain_id, std::uint64_t block_number) {
  auto h = keccak256_concat({sidechain_id.view(), be64(block_number)});
  return Nonce::from_view(h.view().first(Nonce::kSize));
}

Bytes seal_state(const SidechainState& state, const SidechainKey& key) {
  auto nonce = state_nonce(key.sidechain_id, state.block_number);
  ByteWriter w;
  w.raw(kMagic).u16(kStateFileVersion).fixed(key.sidechain_id).fixed(nonce);
  w.raw(aead_encrypt(key, nonce, key.sidechain_id.view(), state.encode()));
  return w.take();
}

StateFileHeader peek_state_header(ByteView sealed) {
  ByteReader r(sealed);
  if (eps::to_string(r.raw(4)) != kMagic) fail(ErrorCode::malformed_input, "not an EPSS file");
  if (auto v = r.u16(); v != kStateFileVersion) {
    fail(ErrorCode::malformed_input, "unsupported EPSS version " + std::to_string(v));
  }
  StateFileHeader h;
  h.sidechain_id = r.fixed<Digest256>();
  h.nonce = r.fixed<Nonce>();
  return h;
}

SidechainState open_state(ByteView sealed, const SidechainKey& key) {
  auto header = peek_state_header(sealed);
  auto plain = aead_decrypt(key, header.nonce, header.sidechain_id.view(), sealed.subspan(kStateHeaderSize));
  if (header.sidechain_id != key.sidechain_id) {
    fail(ErrorCode::wrong_sidechain, "file belongs to sidechain " + header.sidechain_id.hex());
  }
  return SidechainState::decode(plain);
}

void persist_state(const SidechainState& state, const SidechainKey& key, const std::filesystem::path& path) {
  write_file(path, seal_state(state, key));
}

SidechainState load_state(const SidechainKey& key, const std::filesystem::path& path) {
  return open_state(read_file(path), key);
}

}  // namespace eps::sidechain
