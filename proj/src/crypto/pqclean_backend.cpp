// Copyright (c) 2026 The pqdns Authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "backends.hpp"
#include "rng.hpp"

#include <crypto_sign/falcon-1024/clean/api.h>
#include <crypto_sign/falcon-512/clean/api.h>
#include <crypto_sign/falcon-padded-1024/clean/api.h>
#include <crypto_sign/falcon-padded-512/clean/api.h>
#include <crypto_sign/ml-dsa-44/clean/api.h>
#include <crypto_sign/ml-dsa-65/clean/api.h>
#include <crypto_sign/ml-dsa-87/clean/api.h>
#include <crypto_sign/sphincs-sha2-128s-simple/clean/api.h>
#include <crypto_sign/sphincs-shake-128s-simple/clean/api.h>

#include <map>

namespace pqdns::crypto {

namespace {

struct PqcleanApi {
  size_t public_key_len;
  size_t private_key_len;
  size_t signature_len;
  int (*keypair)(uint8_t*, uint8_t*);
  int (*signature)(uint8_t*, size_t*, const uint8_t*, size_t, const uint8_t*);
  int (*verify)(const uint8_t*, size_t, const uint8_t*, size_t, const uint8_t*);
};

// Wrappers because the ML-DSA entry points are context-string macros.
int mldsa44_sig(uint8_t* s, size_t* sl, const uint8_t* m, size_t ml, const uint8_t* sk)
{
  return PQCLEAN_MLDSA44_CLEAN_crypto_sign_signature(s, sl, m, ml, sk);
}
int mldsa44_ver(const uint8_t* s, size_t sl, const uint8_t* m, size_t ml, const uint8_t* pk)
{
  return PQCLEAN_MLDSA44_CLEAN_crypto_sign_verify(s, sl, m, ml, pk);
}
int mldsa65_sig(uint8_t* s, size_t* sl, const uint8_t* m, size_t ml, const uint8_t* sk)
{
  return PQCLEAN_MLDSA65_CLEAN_crypto_sign_signature(s, sl, m, ml, sk);
}
int mldsa65_ver(const uint8_t* s, size_t sl, const uint8_t* m, size_t ml, const uint8_t* pk)
{
  return PQCLEAN_MLDSA65_CLEAN_crypto_sign_verify(s, sl, m, ml, pk);
}
int mldsa87_sig(uint8_t* s, size_t* sl, const uint8_t* m, size_t ml, const uint8_t* sk)
{
  return PQCLEAN_MLDSA87_CLEAN_crypto_sign_signature(s, sl, m, ml, sk);
}
int mldsa87_ver(const uint8_t* s, size_t sl, const uint8_t* m, size_t ml, const uint8_t* pk)
{
  return PQCLEAN_MLDSA87_CLEAN_crypto_sign_verify(s, sl, m, ml, pk);
}

const std::map<std::string, PqcleanApi>& api_table()
{
  static const std::map<std::string, PqcleanApi> table = {
    {"MLDSA44",
     {PQCLEAN_MLDSA44_CLEAN_CRYPTO_PUBLICKEYBYTES,
      PQCLEAN_MLDSA44_CLEAN_CRYPTO_SECRETKEYBYTES,
      PQCLEAN_MLDSA44_CLEAN_CRYPTO_BYTES,
      PQCLEAN_MLDSA44_CLEAN_crypto_sign_keypair, mldsa44_sig, mldsa44_ver}},
    {"MLDSA65",
     {PQCLEAN_MLDSA65_CLEAN_CRYPTO_PUBLICKEYBYTES,
      PQCLEAN_MLDSA65_CLEAN_CRYPTO_SECRETKEYBYTES,
      PQCLEAN_MLDSA65_CLEAN_CRYPTO_BYTES,
      PQCLEAN_MLDSA65_CLEAN_crypto_sign_keypair, mldsa65_sig, mldsa65_ver}},
    {"MLDSA87",
     {PQCLEAN_MLDSA87_CLEAN_CRYPTO_PUBLICKEYBYTES,
      PQCLEAN_MLDSA87_CLEAN_CRYPTO_SECRETKEYBYTES,
      PQCLEAN_MLDSA87_CLEAN_CRYPTO_BYTES,
      PQCLEAN_MLDSA87_CLEAN_crypto_sign_keypair, mldsa87_sig, mldsa87_ver}},
    {"FALCON512",
     {PQCLEAN_FALCON512_CLEAN_CRYPTO_PUBLICKEYBYTES,
      PQCLEAN_FALCON512_CLEAN_CRYPTO_SECRETKEYBYTES,
      PQCLEAN_FALCON512_CLEAN_CRYPTO_BYTES,
      PQCLEAN_FALCON512_CLEAN_crypto_sign_keypair,
      PQCLEAN_FALCON512_CLEAN_crypto_sign_signature,
      PQCLEAN_FALCON512_CLEAN_crypto_sign_verify}},
    {"FALCON1024",
     {PQCLEAN_FALCON1024_CLEAN_CRYPTO_PUBLICKEYBYTES,
      PQCLEAN_FALCON1024_CLEAN_CRYPTO_SECRETKEYBYTES,
      PQCLEAN_FALCON1024_CLEAN_CRYPTO_BYTES,
      PQCLEAN_FALCON1024_CLEAN_crypto_sign_keypair,
      PQCLEAN_FALCON1024_CLEAN_crypto_sign_signature,
      PQCLEAN_FALCON1024_CLEAN_crypto_sign_verify}},
    {"FALCONPADDED512",
     {PQCLEAN_FALCONPADDED512_CLEAN_CRYPTO_PUBLICKEYBYTES,
      PQCLEAN_FALCONPADDED512_CLEAN_CRYPTO_SECRETKEYBYTES,
      PQCLEAN_FALCONPADDED512_CLEAN_CRYPTO_BYTES,
      PQCLEAN_FALCONPADDED512_CLEAN_crypto_sign_keypair,
      PQCLEAN_FALCONPADDED512_CLEAN_crypto_sign_signature,
      PQCLEAN_FALCONPADDED512_CLEAN_crypto_sign_verify}},
    {"FALCONPADDED1024",
     {PQCLEAN_FALCONPADDED1024_CLEAN_CRYPTO_PUBLICKEYBYTES,
      PQCLEAN_FALCONPADDED1024_CLEAN_CRYPTO_SECRETKEYBYTES,
      PQCLEAN_FALCONPADDED1024_CLEAN_CRYPTO_BYTES,
      PQCLEAN_FALCONPADDED1024_CLEAN_crypto_sign_keypair,
      PQCLEAN_FALCONPADDED1024_CLEAN_crypto_sign_signature,
      PQCLEAN_FALCONPADDED1024_CLEAN_crypto_sign_verify}},
    {"SPHINCSSHA2128S",
     {PQCLEAN_SPHINCSSHA2128SSIMPLE_CLEAN_CRYPTO_PUBLICKEYBYTES,
      PQCLEAN_SPHINCSSHA2128SSIMPLE_CLEAN_CRYPTO_SECRETKEYBYTES,
      PQCLEAN_SPHINCSSHA2128SSIMPLE_CLEAN_CRYPTO_BYTES,
      PQCLEAN_SPHINCSSHA2128SSIMPLE_CLEAN_crypto_sign_keypair,
      PQCLEAN_SPHINCSSHA2128SSIMPLE_CLEAN_crypto_sign_signature,
      PQCLEAN_SPHINCSSHA2128SSIMPLE_CLEAN_crypto_sign_verify}},
    {"SPHINCSSHAKE128S",
     {PQCLEAN_SPHINCSSHAKE128SSIMPLE_CLEAN_CRYPTO_PUBLICKEYBYTES,
      PQCLEAN_SPHINCSSHAKE128SSIMPLE_CLEAN_CRYPTO_SECRETKEYBYTES,
      PQCLEAN_SPHINCSSHAKE128SSIMPLE_CLEAN_CRYPTO_BYTES,
      PQCLEAN_SPHINCSSHAKE128SSIMPLE_CLEAN_crypto_sign_keypair,
      PQCLEAN_SPHINCSSHAKE128SSIMPLE_CLEAN_crypto_sign_signature,
      PQCLEAN_SPHINCSSHAKE128SSIMPLE_CLEAN_crypto_sign_verify}},
  };
  return table;
}

const PqcleanApi& api_for(const AlgorithmDescriptor& alg)
{
  auto it = api_table().find(alg.mnemonic);
  if (it == api_table().end())
    throw ProviderError("no PQClean implementation for " + alg.mnemonic);
  return it->second;
}

class PqcleanBackend final : public SignatureBackend {
public:
  Bytes keypair_public(const AlgorithmDescriptor& alg,
                       std::optional<ByteView> seed,
                       Bytes& private_key) const override
  {
    const PqcleanApi& api = api_for(alg);
    Bytes pub(api.public_key_len);
    private_key.resize(api.private_key_len);
    int rc;
    if (seed) {
      DeterministicRng rng(*seed);
      ScopedRngOverride guard(rng);
      rc = api.keypair(pub.data(), private_key.data());
    } else {
      rc = api.keypair(pub.data(), private_key.data());
    }
    if (rc != 0)
      throw ProviderError(alg.mnemonic + ": key generation failed");
    return pub;
  }

  Bytes sign(const AlgorithmDescriptor& alg, ByteView private_key,
             ByteView message) const override
  {
    const PqcleanApi& api = api_for(alg);
    if (private_key.size() != api.private_key_len)
      throw ProviderError(alg.mnemonic + ": bad private key length");
    Bytes sig(api.signature_len);
    size_t siglen = sig.size();
    if (api.signature(sig.data(), &siglen, message.data(), message.size(),
                      private_key.data()) != 0)
      throw ProviderError(alg.mnemonic + ": signing failed");
    sig.resize(siglen);
    return sig;
  }

  bool verify(const AlgorithmDescriptor& alg, ByteView public_key,
              ByteView message, ByteView signature) const override
  {
    const PqcleanApi& api = api_for(alg);
    if (public_key.size() != api.public_key_len)
      return false;
    return api.verify(signature.data(), signature.size(), message.data(),
                      message.size(), public_key.data()) == 0;
  }
};

} // namespace

std::unique_ptr<SignatureBackend> make_pqclean_backend()
{
  return std::make_unique<PqcleanBackend>();
}

} // namespace pqdns::crypto
