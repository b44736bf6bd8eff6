// Copyright (c) 2026 The pqdns Authors. All rights reserved.
// Licensed under the Apache 2.0 License.
//
// SNOVA signatures (unbalanced oil-and-vinegar over the ring of 4x4 GF(16)
// matrices) for the (v=24, o=5, l=4) parameter set. The two variants differ
// only in the XOF used to expand the public matrices: AES-128-CTR or
// SHAKE128.

#pragma once

#include "pqdns/util.hpp"

namespace pqdns::crypto::snova {

enum class PublicXof { Aes128Ctr, Shake128 };

constexpr size_t PUBLIC_KEY_BYTES = 1016;
constexpr size_t PRIVATE_KEY_BYTES = 48;
constexpr size_t SIGNATURE_BYTES = 248;

void keypair(PublicXof xof, uint8_t* public_key, uint8_t* private_key);
Bytes sign(PublicXof xof, ByteView private_key, ByteView message);
bool verify(PublicXof xof, ByteView public_key, ByteView message,
            ByteView signature);

// Exposed for tests: the fixed symmetric ring generator must have an
// irreducible characteristic polynomial over GF(16).
extern const uint8_t S_MATRIX[4][4];

} // namespace pqdns::crypto::snova
