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


// Reference Keccak-256 for tests. Written from the permutation's step
// definitions, one bit at a time: round constants come from the rc(t)
// LFSR and rotation offsets from the (x, y) walk, instead of tables. Slow
// on purpose and shares no code with the library.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace eps::testing {

class ReferenceKeccak {
 public:
  static std::array<std::uint8_t, 32> hash(const std::vector<std::uint8_t>& msg) {
    constexpr std::size_t rate = 136;
    std::vector<std::uint8_t> padded = msg;
    // Original Keccak pad10*1 with the 0x01 domain byte.
    padded.push_back(0x01);
    while (padded.size() % rate != 0) padded.push_back(0x00);
    padded.back() |= 0x80;

    State a{};
    for (std::size_t off = 0; off < padded.size(); off += rate) {
      for (std::size_t i = 0; i < rate * 8; ++i) {
        bool bit = (padded[off + i / 8] >> (i % 8)) & 1;
        a[i] = a[i] ^ bit;
      }
      permute(a);
    }
    std::array<std::uint8_t, 32> out{};
    for (std::size_t i = 0; i < 256; ++i) {
      if (a[i]) out[i / 8] = static_cast<std::uint8_t>(out[i / 8] | (1u << (i % 8)));
    }
    return out;
  }

  static std::array<std::uint8_t, 32> hash(const std::string& s) {
    return hash(std::vector<std::uint8_t>(s.begin(), s.end()));
  }

 private:
  // Bit (x, y, z) lives at index 64 * (5 * y + x) + z.
  using State = std::array<bool, 1600>;

  static bool& at(State& a, int x, int y, int z) { return a[64 * (5 * y + x) + z]; }
  static bool get(const State& a, int x, int y, int z) { return a[64 * (5 * y + x) + z]; }

  static bool rc(int t) {
    if (t % 255 == 0) return true;
    std::array<bool, 9> r{true, false, false, false, false, false, false, false, false};
    for (int i = 1; i <= t % 255; ++i) {
      // R = 0 || R, then taps at 0, 4, 5, 6 take R[8].
      for (int j = 8; j > 0; --j) r[j] = r[j - 1];
      r[0] = r[8];
      r[4] = r[4] ^ r[8];
      r[5] = r[5] ^ r[8];
      r[6] = r[6] ^ r[8];
    }
    return r[0];
  }

  static void permute(State& a) {
    for (int round = 0; round < 24; ++round) {
      // theta
      bool c[5][64];
      for (int x = 0; x < 5; ++x)
        for (int z = 0; z < 64; ++z)
          c[x][z] = get(a, x, 0, z) ^ get(a, x, 1, z) ^ get(a, x, 2, z) ^ get(a, x, 3, z) ^ get(a, x, 4, z);
      for (int x = 0; x < 5; ++x)
        for (int z = 0; z < 64; ++z) {
          bool d = c[(x + 4) % 5][z] ^ c[(x + 1) % 5][(z + 63) % 64];
          for (int y = 0; y < 5; ++y) at(a, x, y, z) = get(a, x, y, z) ^ d;
        }
      // rho
      State b = a;
      int x = 1, y = 0;
      for (int t = 0; t < 24; ++t) {
        int shift = ((t + 1) * (t + 2) / 2) % 64;
        for (int z = 0; z < 64; ++z) at(b, x, y, z) = get(a, x, y, (z - shift + 64 * 64) % 64);
        int nx = y, ny = (2 * x + 3 * y) % 5;
        x = nx;
        y = ny;
      }
      // pi
      State p{};
      for (int xx = 0; xx < 5; ++xx)
        for (int yy = 0; yy < 5; ++yy)
          for (int z = 0; z < 64; ++z) at(p, xx, yy, z) = get(b, (xx + 3 * yy) % 5, xx, z);
      // chi
      for (int xx = 0; xx < 5; ++xx)
        for (int yy = 0; yy < 5; ++yy)
          for (int z = 0; z < 64; ++z)
            at(a, xx, yy, z) = get(p, xx, yy, z) ^ (!get(p, (xx + 1) % 5, yy, z) && get(p, (xx + 2) % 5, yy, z));
      // iota
      for (int j = 0; j <= 6; ++j) {
        int z = (1 << j) - 1;
        at(a, 0, 0, z) = get(a, 0, 0, z) ^ rc(j + 7 * round);
      }
    }
  }
};

inline std::string hex(const std::array<std::uint8_t, 32>& d) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  for (auto b : d) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 15]);
  }
  return s;
}

}  // namespace eps::testing
