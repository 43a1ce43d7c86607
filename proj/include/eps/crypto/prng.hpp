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
#include <string_view>
#include <utility>

#include "eps/crypto/bytes.hpp"

namespace eps {

inline constexpr std::string_view kPrngDomain = "EPS-PIN-PRNG-V1";

/// Hash-chain generator seeded from a Sidechain Secret. Emitting a value is
/// the only transition: value_i = keccak^i(state_0).
struct PrngState {
  Digest256 state;
  std::uint64_t counter = 0;

  auto operator<=>(const PrngState&) const = default;
};

/// state_0 = keccak256(secret ++ "EPS-PIN-PRNG-V1"). Throws invalid-seed on
/// an empty secret.
PrngState prng_seed(ByteView sidechain_secret);

/// Returns the current chain value and the advanced state.
std::pair<Digest256, PrngState> prng_next(const PrngState& s);

}  // namespace eps
