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

#include "eps/netsim/network.hpp"

namespace eps::netsim {

std::string SimNetwork::cross_chain_read(const std::string& origin_node, const Address& sender,
                                         const Digest256& sidechain, const Digest256& target, std::uint64_t block,
                                         const std::string& contract, const std::string& key, std::uint64_t window,
                                         const std::string& dest_contract, const std::string& dest_key) {
  const auto& target_meta = meta(target);
  auto head = target_meta.head();
  if (block > head || head - block > window) {
    fail(ErrorCode::stale_block_reference, "block " + std::to_string(block) + " against head " +
                                               std::to_string(head) + " with window " + std::to_string(window));
  }
  auto servers = reachable_plaintext(target_meta);
  if (servers.empty()) fail(ErrorCode::unknown_sidechain, "target sidechain unreachable");
  // Same address on both chains: the target must admit the reader.
  if (!node(servers.front()).policy().account_whitelist.contains(sender)) {
    fail(ErrorCode::unauthorized_reader, sender.hex() + " may not read the target sidechain");
  }

  sidechain::AnchoredRead anchor{target, block, contract, key};
  SidechainTx tx;
  tx.sender = sender;
  tx.op = sidechain::TxOp::anchored_put;
  tx.contract = dest_contract;
  tx.key = dest_key;
  tx.anchor = anchor;
  submit(origin_node, sender.hex(), sidechain, std::move(tx));
  return serve_anchored_read(anchor);
}

}  // namespace eps::netsim
