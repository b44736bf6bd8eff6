// Copyright (c) 2026 The pqdns Authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include "pqdns/util.hpp"

#include <fips202.h>

namespace pqdns::crypto {

// SHAKE256-based deterministic byte stream used for seeded key generation.
class DeterministicRng {
public:
  explicit DeterministicRng(ByteView seed)
  {
    shake256_inc_init(&ctx_);
    shake256_inc_absorb(&ctx_, seed.data(), seed.size());
    shake256_inc_finalize(&ctx_);
  }

  ~DeterministicRng() { shake256_inc_ctx_release(&ctx_); }

  DeterministicRng(const DeterministicRng&) = delete;
  DeterministicRng& operator=(const DeterministicRng&) = delete;

  void fill(uint8_t* out, size_t n) { shake256_inc_squeeze(out, n, &ctx_); }

private:
  shake256incctx ctx_;
};

// While alive, redirects this thread's random_fill() (and therefore the
// PQClean randombytes callback) to the given deterministic stream.
class ScopedRngOverride {
public:
  explicit ScopedRngOverride(DeterministicRng& rng);
  ~ScopedRngOverride();

  ScopedRngOverride(const ScopedRngOverride&) = delete;
  ScopedRngOverride& operator=(const ScopedRngOverride&) = delete;

private:
  DeterministicRng* previous_;
};

void random_fill(uint8_t* out, size_t n);

inline Bytes random_bytes(size_t n)
{
  Bytes out(n);
  random_fill(out.data(), out.size());
  return out;
}

} // namespace pqdns::crypto
