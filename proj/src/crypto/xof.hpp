// Copyright (c) 2026 The pqdns Authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include "pqdns/util.hpp"

#include <fips202.h>
#include <openssl/evp.h>

#include <stdexcept>

namespace pqdns::crypto {

// AES-128-CTR keystream (zero IV) used to expand public matrices from a
// 16-byte seed.
inline void aes128ctr_expand(const uint8_t key[16], uint8_t* out, size_t outlen)
{
  EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
  if (ctx == nullptr)
    throw std::runtime_error("EVP_CIPHER_CTX_new failed");
  uint8_t iv[16] = {0};
  int len = 0;
  std::fill(out, out + outlen, 0);
  if (EVP_EncryptInit_ex(ctx, EVP_aes_128_ctr(), nullptr, key, iv) != 1 ||
      EVP_EncryptUpdate(ctx, out, &len, out, static_cast<int>(outlen)) != 1) {
    EVP_CIPHER_CTX_free(ctx);
    throw std::runtime_error("AES-128-CTR expansion failed");
  }
  EVP_CIPHER_CTX_free(ctx);
}

inline void shake256_expand(ByteView input, uint8_t* out, size_t outlen)
{
  shake256(out, outlen, input.data(), input.size());
}

inline void shake128_expand(ByteView input, uint8_t* out, size_t outlen)
{
  shake128(out, outlen, input.data(), input.size());
}

inline Bytes concat(std::initializer_list<ByteView> parts)
{
  Bytes out;
  for (ByteView p : parts)
    out.insert(out.end(), p.begin(), p.end());
  return out;
}

} // namespace pqdns::crypto
