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

#include "eps/crypto/keccak.hpp"
#include "eps/netsim/network.hpp"

namespace eps::netsim {

std::vector<Digest256> SimNetwork::guardian_pin_cycle(const std::string& guardian, const Digest256& sidechain,
                                                      std::uint64_t every) {
  auto& g = node(guardian);
  g.authorize_admin(guardian);
  if (every == 0) fail(ErrorCode::configuration, "pin interval must be at least 1");
  auto& m = meta_mut(sidechain);
  if (m.guardian && *m.guardian != guardian) {
    fail(ErrorCode::configuration, "sidechain already pinned by " + *m.guardian);
  }
  auto& rt = g.runtime(sidechain);
  if (!rt.secret) fail(ErrorCode::configuration, guardian + " has no sidechain secret");
  if (!rt.pinning) rt.pinning = sidechain::PinCursor{prng_seed(*rt.secret), every, 0, {}};
  rt.pinning->every = every;
  m.guardian = guardian;
  return run_pin_cycle(sidechain);
}

void SimNetwork::corrupt_next_pin(const Digest256& sidechain) { meta_mut(sidechain).corrupt_next_pin = true; }

std::vector<Digest256> SimNetwork::run_pin_cycle(const Digest256& sidechain) {
  auto& m = meta_mut(sidechain);
  std::vector<Digest256> posted;
  if (!m.guardian || !online(*m.guardian)) return posted;
  auto& g = node(*m.guardian);
  auto& rt = g.runtime(sidechain);
  if (rt.archived) return posted;
  auto& cursor = *rt.pinning;
  const auto& contract = pinning();

  for (auto b = cursor.last_block + 1; b <= rt.head; ++b) {
    cursor.last_block = b;
    if (b % cursor.every != 0) continue;
    auto sealed = rt.sealed.find(b);
    if (sealed == rt.sealed.end()) continue;
    auto pin = keccak256(sealed->second);
    if (m.corrupt_next_pin) {
      pin = keccak256_concat({as_bytes("corrupt"), pin.view()});
      m.corrupt_next_pin = false;
    }
    // Chain from the last pin that was not voted invalid.
    Digest256 previous;
    for (auto it = cursor.posted.rbegin(); it != cursor.posted.rend(); ++it) {
      auto entry = contract.pin(it->map_key);
      if (entry && entry->status != pinning::PinStatus::voted_invalid) {
        previous = it->pin;
        break;
      }
    }
    auto [value, next] = prng_next(cursor.prng);
    auto key = pinning::compute_map_key(sidechain, previous, value);
    mgmt_call(org(g.org()).address, pinning_, "postPin", pinning::encode_post_pin_args(key, pin));
    cursor.prng = next;
    cursor.posted.push_back({b, key, pin});
    posted.push_back(key);
  }
  return posted;
}

std::uint64_t SimNetwork::contest(const std::string& node_id, const Digest256& sidechain, std::size_t pin_index) {
  auto& n = node(node_id);
  n.authorize_admin(node_id);
  const auto& rt = n.runtime(sidechain);
  if (!rt.secret) fail(ErrorCode::configuration, node_id + " has no sidechain secret");
  auto chain = pinning::pin_chain_verify(pinning(), sidechain, *rt.secret, pin_index + 1);
  Digest256 previous_key;
  for (std::size_t i = 0; i < pin_index; ++i) {
    if (chain[i].status != pinning::PinStatus::voted_invalid) previous_key = chain[i].map_key;
  }
  auto receipt = mgmt_call(org(n.org()).address, pinning_, "contestPin",
                           pinning::encode_contest_args(previous_key, chain[pin_index].prng_value, sidechain));
  return pinning::decode_u64_result(receipt.output);
}

}  // namespace eps::netsim
