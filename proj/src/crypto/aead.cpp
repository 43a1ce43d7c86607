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

#include "eps/crypto/aead.hpp"

#include <openssl/evp.h>

#include <climits>
#include <memory>

#include "eps/crypto/keccak.hpp"

namespace eps {
namespace {

struct CipherCtxDeleter {
  void operator()(EVP_CIPHER_CTX* ctx) const { EVP_CIPHER_CTX_free(ctx); }
};
using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, CipherCtxDeleter>;

CipherCtx new_ctx() {
  CipherCtx ctx(EVP_CIPHER_CTX_new());
  if (!ctx) throw std::bad_alloc();
  return ctx;
}

int checked_len(std::size_t n) {
  if (n > static_cast<std::size_t>(INT_MAX)) fail(ErrorCode::malformed_input, "buffer too large");
  return static_cast<int>(n);
}

void init(EVP_CIPHER_CTX* ctx, bool encrypt, const SidechainKey& key, const Nonce& nonce) {
  int enc = encrypt ? 1 : 0;
  bool ok = EVP_CipherInit_ex(ctx, EVP_aes_256_gcm(), nullptr, nullptr, nullptr, enc) == 1 &&
            EVP_CIPHER_CTX_ctrl(ctx, EVP_CTRL_GCM_SET_IVLEN, static_cast<int>(Nonce::kSize),
                                nullptr) == 1 &&
            EVP_CipherInit_ex(ctx, nullptr, nullptr, key.key.data(), nonce.bytes.data(), enc) == 1;
  if (!ok) fail(ErrorCode::invalid_key, "cipher initialisation failed");
}

void feed_aad(EVP_CIPHER_CTX* ctx, ByteView aad) {
  int len = 0;
  if (!aad.empty() &&
      EVP_CipherUpdate(ctx, nullptr, &len, aad.data(), checked_len(aad.size())) != 1) {
    fail(ErrorCode::malformed_input, "aad rejected");
  }
}

}  // namespace

SidechainKey derive_sidechain_key(ByteView root_key, const Digest256& sidechain_id) {
  if (root_key.size() != 32) {
    fail(ErrorCode::invalid_key, "root key must be 32 bytes, got " + std::to_string(root_key.size()));
  }
  SidechainKey out;
  out.key = keccak256_concat({root_key, sidechain_id.view(), as_bytes(kStateKeyDomain)}).bytes;
  out.sidechain_id = sidechain_id;
  return out;
}

Bytes aead_encrypt(const SidechainKey& key, const Nonce& nonce, ByteView aad, ByteView plaintext) {
  auto ctx = new_ctx();
  init(ctx.get(), true, key, nonce);
  feed_aad(ctx.get(), aad);

  Bytes out(plaintext.size() + kAeadTagSize);
  int len = 0;
  if (!plaintext.empty() &&
      EVP_CipherUpdate(ctx.get(), out.data(), &len, plaintext.data(),
                       checked_len(plaintext.size())) != 1) {
    fail(ErrorCode::malformed_input, "encryption failed");
  }
  int tail = 0;
  if (EVP_CipherFinal_ex(ctx.get(), out.data() + len, &tail) != 1) {
    fail(ErrorCode::malformed_input, "encryption finalisation failed");
  }
  if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_GET_TAG, static_cast<int>(kAeadTagSize),
                          out.data() + plaintext.size()) != 1) {
    fail(ErrorCode::malformed_input, "tag extraction failed");
  }
  return out;
}

Bytes aead_decrypt(const SidechainKey& key, const Nonce& nonce, ByteView aad, ByteView sealed) {
  if (sealed.size() < kAeadTagSize) fail(ErrorCode::malformed_input, "ciphertext shorter than tag");
  const std::size_t body = sealed.size() - kAeadTagSize;

  auto ctx = new_ctx();
  init(ctx.get(), false, key, nonce);
  feed_aad(ctx.get(), aad);

  Bytes out(body);
  int len = 0;
  if (body > 0 &&
      EVP_CipherUpdate(ctx.get(), out.data(), &len, sealed.data(), checked_len(body)) != 1) {
    fail(ErrorCode::malformed_input, "decryption failed");
  }
  // OpenSSL takes a non-const tag pointer.
  std::array<std::uint8_t, kAeadTagSize> tag{};
  std::copy(sealed.begin() + static_cast<std::ptrdiff_t>(body), sealed.end(), tag.begin());
  if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_TAG, static_cast<int>(kAeadTagSize),
                          tag.data()) != 1) {
    fail(ErrorCode::malformed_input, "tag rejected");
  }
  int tail = 0;
  if (EVP_CipherFinal_ex(ctx.get(), out.data() + len, &tail) != 1) {
    fail(ErrorCode::tamper_detected, "authentication failed");
  }
  return out;
}

}  // namespace eps
