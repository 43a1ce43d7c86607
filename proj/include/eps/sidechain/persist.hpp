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
#include <filesystem>

#include "eps/crypto/aead.hpp"
#include "eps/sidechain/state.hpp"

namespace eps::sidechain {

inline constexpr std::uint16_t kStateFileVersion = 1;
inline constexpr std::size_t kStateHeaderSize = 4 + 2 + 32 + 12;

/// First 12 bytes of keccak256(sidechainId ++ be64(blockNumber)).
Nonce state_nonce(const Digest256& sidechain_id, std::uint64_t block_number);

struct StateFileHeader {
  Digest256 sidechain_id;
  Nonce nonce;
};

/// "EPSS" ++ u16be version ++ sidechainId ++ nonce ++ AEAD(key, nonce,
/// aad = sidechainId, state.encode()).
Bytes seal_state(const SidechainState& state, const SidechainKey& key);
/// Throws malformed-input on a bad header, tamper-detected when the
/// ciphertext does not authenticate under `key`, and wrong-sidechain when it
/// does but belongs to another id.
SidechainState open_state(ByteView sealed, const SidechainKey& key);
StateFileHeader peek_state_header(ByteView sealed);

void persist_state(const SidechainState& state, const SidechainKey& key, const std::filesystem::path& path);
SidechainState load_state(const SidechainKey& key, const std::filesystem::path& path);

}  // namespace eps::sidechain
