// Copyright (c) 2026 The pqdns Authors. All rights reserved.
// Licensed under the Apache 2.0 License.
//
// MAYO signatures (whipped unbalanced oil-and-vinegar over GF(16)) for the
// MAYO-1 and MAYO-3 parameter sets.

#pragma once

#include "pqdns/util.hpp"

namespace pqdns::crypto::mayo {

struct Params {
  int n;               // total variables
  int m;               // equations
  int o;               // oil variables
  int k;               // whipping factor
  size_t sk_seed_bytes;
  size_t salt_bytes;
  size_t digest_bytes;

  int v() const { return n - o; }
  size_t public_key_bytes() const
  {
    return 16 + (static_cast<size_t>(m) * (static_cast<size_t>(o) * (o + 1) / 2) + 1) / 2;
  }
  size_t private_key_bytes() const { return sk_seed_bytes; }
  size_t signature_bytes() const
  {
    return (static_cast<size_t>(n) * k + 1) / 2 + salt_bytes;
  }
};

const Params& mayo1(); // 1420 / 24 / 454 bytes
const Params& mayo3(); // 2986 / 32 / 681 bytes

void keypair(const Params& p, uint8_t* public_key, uint8_t* private_key);
Bytes sign(const Params& p, ByteView private_key, ByteView message);
bool verify(const Params& p, ByteView public_key, ByteView message,
            ByteView signature);

} // namespace pqdns::crypto::mayo
