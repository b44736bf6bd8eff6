// Copyright (c) 2026 The pqdns Authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include "pqdns/util.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pqdns::crypto {

struct CryptoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Provider reported a failure (bad key material, internal error).
struct ProviderError : CryptoError {
  using CryptoError::CryptoError;
};

struct UnknownAlgorithmError : CryptoError {
  using CryptoError::CryptoError;
};

enum class Family {
  RSA,
  ECDSA,
  ED25519,
  ML_DSA,
  FALCON,
  SPHINCS_PLUS,
  MAYO,
  SNOVA,
};

std::string_view family_name(Family family);

class SignatureBackend;

// One signature scheme. Size fields are in bytes; 0 means not fixed (the
// classical private keys are DER-encoded and vary slightly in length).
struct AlgorithmDescriptor {
  uint8_t code = 0;
  std::string mnemonic;
  Family family = Family::RSA;
  size_t public_key_len = 0;
  size_t private_key_len = 0;
  size_t signature_len = 0;
  // True for the unpadded Falcon variants: signatures vary up to
  // signature_len; everything else is exact.
  bool signature_len_is_max = false;
  // Whether generate_keypair honors an rng seed.
  bool deterministic_keygen = false;
  const SignatureBackend* backend = nullptr;
};

struct KeyPair {
  AlgorithmDescriptor alg;
  Bytes public_key;
  Bytes private_key; // secret; never logged or printed
};

// Backs one or more registry entries with actual implementations.
class SignatureBackend {
public:
  virtual ~SignatureBackend() = default;
  virtual Bytes keypair_public(const AlgorithmDescriptor& alg,
                               std::optional<ByteView> seed,
                               Bytes& private_key) const = 0;
  virtual Bytes sign(const AlgorithmDescriptor& alg, ByteView private_key,
                     ByteView message) const = 0;
  virtual bool verify(const AlgorithmDescriptor& alg, ByteView public_key,
                      ByteView message, ByteView signature) const = 0;
};

// The 18 evaluated schemes: 5 classical, 13 post-quantum. Classical schemes
// use their IANA DNSSEC numbers; post-quantum schemes take consecutive
// defaults from 17 upward, overridable per instance.
class Registry {
public:
  Registry();

  const std::vector<AlgorithmDescriptor>& algorithms() const { return algorithms_; }

  // Lookup is tolerant of separators and case: "ML-DSA-44", "mldsa44" and
  // "MLDSA44" all match. Returns nullptr when absent.
  const AlgorithmDescriptor* find_mnemonic(std::string_view mnemonic) const;
  const AlgorithmDescriptor& by_mnemonic(std::string_view mnemonic) const;
  const AlgorithmDescriptor* find_code(uint8_t code) const;
  const AlgorithmDescriptor& by_code(uint8_t code) const;

  // Configuration hook: map mnemonic -> replacement code point.
  void apply_code_overrides(const std::map<std::string, uint8_t>& overrides);

  KeyPair generate_keypair(const AlgorithmDescriptor& alg,
                           std::optional<ByteView> seed = std::nullopt) const;
  KeyPair generate_keypair(std::string_view mnemonic,
                           std::optional<ByteView> seed = std::nullopt) const;

  // Signs a non-empty message; enforces the descriptor's signature length
  // contract on the result.
  Bytes sign(const KeyPair& key, ByteView message) const;

  // Accept/reject; malformed signatures reject rather than throw.
  bool verify(const AlgorithmDescriptor& alg, ByteView public_key,
              ByteView message, ByteView signature) const;

private:
  std::vector<AlgorithmDescriptor> algorithms_;
  std::vector<std::unique_ptr<SignatureBackend>> backends_;
};

// Canonical mnemonic form: uppercase with separators removed.
std::string normalize_mnemonic(std::string_view mnemonic);

const Registry& default_registry();

} // namespace pqdns::crypto
