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
#include <map>
#include <string>
#include <string_view>

#include "eps/crypto/bytes.hpp"

namespace eps {

/// Ordered key-value image of a state machine. std::map over byte vectors
/// orders keys lexicographically by unsigned byte, which is the canonical
/// order.
using KvMap = std::map<Bytes, Bytes>;

/// Canonical serialization: for each pair in key order,
/// u32be(len key) ++ key ++ u32be(len value) ++ value.
Bytes encode_kv(const KvMap& kv);

/// Inverse of encode_kv. Throws malformed-input on truncation or when keys
/// are not strictly increasing.
KvMap decode_kv(ByteView data);

inline Bytes kv_key(std::string_view prefix, ByteView suffix = {}) {
  return concat({as_bytes(prefix), suffix});
}

/// Big-endian writer for the fixed-width layouts used in call arguments and
/// file headers.
class ByteWriter {
 public:
  ByteWriter& u8(std::uint8_t v);
  ByteWriter& u16(std::uint16_t v);
  ByteWriter& u32(std::uint32_t v);
  ByteWriter& u64(std::uint64_t v);
  ByteWriter& raw(ByteView data);
  ByteWriter& raw(std::string_view text) { return raw(as_bytes(text)); }
  /// u32be length prefix then the bytes.
  ByteWriter& blob(ByteView data);
  ByteWriter& blob(std::string_view text) { return blob(as_bytes(text)); }

  template <typename Fixed>
  ByteWriter& fixed(const Fixed& f) {
    return raw(f.view());
  }

  const Bytes& bytes() const { return out_; }
  Bytes take() { return std::move(out_); }

 private:
  Bytes out_;
};

/// Bounds-checked reader; every underflow throws malformed-input.
class ByteReader {
 public:
  explicit ByteReader(ByteView data) : data_(data) {}

  std::uint8_t u8();
  std::uint16_t u16();
  std::uint32_t u32();
  std::uint64_t u64();
  ByteView raw(std::size_t n);
  Bytes blob();
  std::string string();

  template <typename Fixed>
  Fixed fixed() {
    return Fixed::from_view(raw(Fixed::kSize));
  }

  ByteView rest();
  std::size_t remaining() const { return data_.size() - pos_; }
  bool done() const { return pos_ == data_.size(); }
  /// Throws malformed-input if bytes are left over.
  void expect_end() const;

 private:
  ByteView data_;
  std::size_t pos_ = 0;
};

}  // namespace eps
