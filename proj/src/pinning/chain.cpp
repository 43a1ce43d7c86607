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

#include "eps/crypto/prng.hpp"
#include "eps/pinning/pinning.hpp"

namespace eps::pinning {

std::vector<LocatedPin> pin_chain_verify(const PinningContract& contract, const Digest256& sidechain_id,
                                         ByteView secret, std::size_t expected_count) {
  std::vector<LocatedPin> out;
  if (expected_count == 0) return out;
  auto prng = prng_seed(secret);
  Digest256 previous;
  for (std::size_t i = 0; i < expected_count; ++i) {
    auto [value, next] = prng_next(prng);
    prng = next;
    auto key = compute_map_key(sidechain_id, previous, value);
    auto entry = contract.pin(key);
    if (!entry) throw ChainBrokenError(i);
    out.push_back({i, key, entry->pin, entry->status, entry->posted_at, value, previous});
    if (entry->status != PinStatus::voted_invalid) previous = entry->pin;
  }
  return out;
}

std::vector<LocatedPin> pin_chain_verify(const WorldState& state, const ContractId& pinning,
                                         const Digest256& sidechain_id, ByteView secret,
                                         std::size_t expected_count) {
  return pin_chain_verify(state.as<PinningContract>(pinning), sidechain_id, secret, expected_count);
}

}  // namespace eps::pinning
