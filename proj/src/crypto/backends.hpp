// Copyright (c) 2026 The pqdns Authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include "pqdns/algoreg.hpp"

#include <memory>

namespace pqdns::crypto {

// OpenSSL-backed RSA / ECDSA / Ed25519 with DNSSEC wire formats for public
// keys and signatures.
std::unique_ptr<SignatureBackend> make_classical_backend();

// PQClean reference implementations: ML-DSA, Falcon and SPHINCS+ families.
std::unique_ptr<SignatureBackend> make_pqclean_backend();

// In-repo GF(16) multivariate schemes: MAYO and SNOVA families.
std::unique_ptr<SignatureBackend> make_multivariate_backend();

} // namespace pqdns::crypto
