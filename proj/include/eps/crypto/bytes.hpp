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

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eps/error.hpp"

namespace eps {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

std::string to_hex(ByteView data);

/// Lowercase or uppercase hex, optional "0x" prefix. Throws malformed-input.
Bytes from_hex(std::string_view hex);

inline ByteView as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

inline Bytes to_bytes(std::string_view s) {
  auto v = as_bytes(s);
  return {v.begin(), v.end()};
}

inline std::string to_string(ByteView data) {
  return {reinterpret_cast<const char*>(data.data()), data.size()};
}

Bytes concat(std::initializer_list<ByteView> parts);

std::array<std::uint8_t, 8> be64(std::uint64_t value);

/// Fixed-width byte string. The tag keeps digests, addresses and nonces from
/// being mixed up.
template <std::size_t N, typename Tag>
struct FixedBytes {
  static constexpr std::size_t kSize = N;

  std::array<std::uint8_t, N> bytes{};

  static FixedBytes from_view(ByteView data) {
    if (data.size() != N) {
      fail(ErrorCode::malformed_input,
           "expected " + std::to_string(N) + " bytes, got " + std::to_string(data.size()));
    }
    FixedBytes out;
    std::copy(data.begin(), data.end(), out.bytes.begin());
    return out;
  }

  static FixedBytes from_hex(std::string_view hex) {
    auto raw = eps::from_hex(hex);
    return from_view(raw);
  }

  ByteView view() const { return {bytes.data(), N}; }
  Bytes to_vector() const { return {bytes.begin(), bytes.end()}; }
  std::string hex() const { return to_hex(view()); }

  bool is_zero() const {
    return std::all_of(bytes.begin(), bytes.end(), [](std::uint8_t b) { return b == 0; });
  }

  auto operator<=>(const FixedBytes&) const = default;
};

struct DigestTag {};
struct AddressTag {};
struct NonceTag {};

using Digest256 = FixedBytes<32, DigestTag>;
using Address = FixedBytes<20, AddressTag>;
using Nonce = FixedBytes<12, NonceTag>;

}  // namespace eps
