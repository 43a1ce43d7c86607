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

/// Incremental Keccak-256 with the original Keccak padding (0x01 ... 0x80),
/// i.e. the Ethereum flavour, not NIST SHA3-256.
class Keccak256 {
 public:
  static constexpr std::size_t kRate = 136;

  Keccak256& update(ByteView data);
  Keccak256& update(std::string_view text) { return update(as_bytes(text)); }

  /// Pads and squeezes. The hasher must not be updated afterwards.
  Digest256 finalize();

 private:
  void absorb_block();

  std::array<std::uint64_t, 25> lanes_{};
  std::array<std::uint8_t, kRate> buffer_{};
  std::size_t buffered_ = 0;
};

Digest256 keccak256(ByteView data);
Digest256 keccak256(std::string_view text);

/// Hash of the raw concatenation of `parts`, without materializing it.
Digest256 keccak256_concat(std::initializer_list<ByteView> parts);

/// The Keccak-f[1600] permutation on 25 little-endian lanes.
void keccak_f1600(std::array<std::uint64_t, 25>& lanes);

}  // namespace eps
