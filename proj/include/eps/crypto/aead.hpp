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

#include <array>
#include <cstdint>
#include <string_view>

#include "eps/crypto/bytes.hpp"

namespace eps {

inline constexpr std::string_view kStateKeyDomain = "EPS-STATE-KEY-V1";
inline constexpr std::size_t kAeadTagSize = 16;

/// Symmetric state key bound to one sidechain.
struct SidechainKey {
  std::array<std::uint8_t, 32> key{};
  Digest256 sidechain_id;

  bool operator==(const SidechainKey&) const = default;
};

/// key = keccak256(root_key ++ sidechain_id ++ "EPS-STATE-KEY-V1").
/// Throws invalid-key unless root_key is 32 bytes.
SidechainKey derive_sidechain_key(ByteView root_key, const Digest256& sidechain_id);

// AES-256-GCM. Output of encrypt is ciphertext followed by the 16-byte tag.
// decrypt throws tamper-detected when authentication fails and
// malformed-input when the input is too short to carry a tag.
Bytes aead_encrypt(const SidechainKey& key, const Nonce& nonce, ByteView aad, ByteView plaintext);
Bytes aead_decrypt(const SidechainKey& key, const Nonce& nonce, ByteView aad, ByteView sealed);

}  // namespace eps
