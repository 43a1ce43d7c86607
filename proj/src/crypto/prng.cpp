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

#include "eps/crypto/keccak.hpp"

namespace eps {

PrngState prng_seed(ByteView sidechain_secret) {
  if (sidechain_secret.empty()) fail(ErrorCode::invalid_seed, "sidechain secret is empty");
  return PrngState{keccak256_concat({sidechain_secret, as_bytes(kPrngDomain)}), 0};
}

std::pair<Digest256, PrngState> prng_next(const PrngState& s) {
  return {s.state, PrngState{keccak256(s.state.view()), s.counter + 1}};
}

}  // namespace eps
