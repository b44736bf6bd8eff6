// Copyright (c) 2026 The pqdns Authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "rng.hpp"

#include <randombytes.h>

#include <stdexcept>
#include <sys/random.h>

namespace pqdns::crypto {

namespace {
thread_local DeterministicRng* tl_override = nullptr;
} // namespace

ScopedRngOverride::ScopedRngOverride(DeterministicRng& rng)
  : previous_(tl_override)
{
  tl_override = &rng;
}

ScopedRngOverride::~ScopedRngOverride()
{
  tl_override = previous_;
}

void random_fill(uint8_t* out, size_t n)
{
  if (tl_override != nullptr) {
    tl_override->fill(out, n);
    return;
  }
  size_t done = 0;
  while (done < n) {
    ssize_t r = getrandom(out + done, n - done, 0);
    if (r < 0)
      throw std::runtime_error("getrandom failed");
    done += static_cast<size_t>(r);
  }
}

} // namespace pqdns::crypto

// PQClean's randombytes interface; routed through random_fill so seeded key
// generation stays deterministic for the reference schemes too.
extern "C" int PQCLEAN_randombytes(uint8_t* output, size_t n)
{
  try {
    pqdns::crypto::random_fill(output, n);
  } catch (...) {
    return -1;
  }
  return 0;
}
