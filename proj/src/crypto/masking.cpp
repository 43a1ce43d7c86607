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

#include "eps/crypto/masking.hpp"

#include "eps/crypto/keccak.hpp"

namespace eps {

Digest256 mask_participant(const Address& addr, const Digest256& salt) {
  return keccak256_concat({addr.view(), salt.view()});
}

bool verify_unmask(const Address& addr, const Digest256& salt, const Digest256& mask) {
  return mask_participant(addr, salt) == mask;
}

}  // namespace eps
