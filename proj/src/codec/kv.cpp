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

#include "eps/codec/kv.hpp"

namespace eps {

Bytes encode_kv(const KvMap& kv) {
  ByteWriter w;
  for (const auto& [k, v] : kv) w.blob(k).blob(v);
  return w.take();
}

KvMap decode_kv(ByteView data) {
  KvMap out;
  ByteReader r(data);
  while (!r.done()) {
    auto k = r.blob();
    auto v = r.blob();
    if (!out.empty() && !(out.rbegin()->first < k)) {
      fail(ErrorCode::malformed_input, "keys not in canonical order");
    }
    out.emplace_hint(out.end(), std::move(k), std::move(v));
  }
  return out;
}

ByteWriter& ByteWriter::u8(std::uint8_t v) {
  out_.push_back(v);
  return *this;
}

ByteWriter& ByteWriter::u16(std::uint16_t v) {
  out_.push_back(static_cast<std::uint8_t>(v >> 8));
  out_.push_back(static_cast<std::uint8_t>(v));
  return *this;
}

ByteWriter& ByteWriter::u32(std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out_.push_back(static_cast<std::uint8_t>(v >> shift));
  return *this;
}

ByteWriter& ByteWriter::u64(std::uint64_t v) {
  auto b = be64(v);
  out_.insert(out_.end(), b.begin(), b.end());
  return *this;
}

ByteWriter& ByteWriter::raw(ByteView data) {
  out_.insert(out_.end(), data.begin(), data.end());
  return *this;
}

ByteWriter& ByteWriter::blob(ByteView data) {
  if (data.size() > UINT32_MAX) fail(ErrorCode::malformed_input, "blob too large");
  u32(static_cast<std::uint32_t>(data.size()));
  return raw(data);
}

ByteView ByteReader::raw(std::size_t n) {
  if (remaining() < n) {
    fail(ErrorCode::malformed_input,
         "truncated input: need " + std::to_string(n) + " bytes, have " + std::to_string(remaining()));
  }
  auto out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

std::uint8_t ByteReader::u8() { return raw(1)[0]; }

std::uint16_t ByteReader::u16() {
  auto b = raw(2);
  return static_cast<std::uint16_t>((b[0] << 8) | b[1]);
}

std::uint32_t ByteReader::u32() {
  auto b = raw(4);
  std::uint32_t v = 0;
  for (auto x : b) v = (v << 8) | x;
  return v;
}

std::uint64_t ByteReader::u64() {
  auto b = raw(8);
  std::uint64_t v = 0;
  for (auto x : b) v = (v << 8) | x;
  return v;
}

Bytes ByteReader::blob() {
  auto n = u32();
  auto b = raw(n);
  return {b.begin(), b.end()};
}

std::string ByteReader::string() { return to_string(blob()); }

ByteView ByteReader::rest() { return raw(remaining()); }

void ByteReader::expect_end() const {
  if (!done()) fail(ErrorCode::malformed_input, std::to_string(remaining()) + " trailing bytes");
}

}  // namespace eps
