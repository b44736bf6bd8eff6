// Copyright (c) 2026 The pqdns Authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "backends.hpp"

#include <openssl/core_names.h>
#include <openssl/ecdsa.h>
#include <openssl/err.h>
#include <openssl/evp.h>
#include <openssl/param_build.h>

#include <cstring>

namespace pqdns::crypto {

namespace {

struct EvpPkeyDeleter {
  void operator()(EVP_PKEY* p) const { EVP_PKEY_free(p); }
};
using PkeyPtr = std::unique_ptr<EVP_PKEY, EvpPkeyDeleter>;

struct MdCtxDeleter {
  void operator()(EVP_MD_CTX* p) const { EVP_MD_CTX_free(p); }
};
using MdCtxPtr = std::unique_ptr<EVP_MD_CTX, MdCtxDeleter>;

[[noreturn]] void fail(const std::string& what)
{
  throw ProviderError("openssl: " + what);
}

struct SchemeInfo {
  int rsa_bits = 0;            // RSA only
  const char* curve = nullptr; // ECDSA only
  const char* digest = nullptr;
  size_t field_len = 0; // ECDSA coordinate width
};

SchemeInfo scheme_info(const AlgorithmDescriptor& alg)
{
  switch (alg.family) {
  case Family::RSA:
    return {alg.mnemonic == "RSA4096" ? 4096 : 2048, nullptr, "SHA256", 0};
  case Family::ECDSA:
    if (alg.mnemonic == "ECDSAP384")
      return {0, "P-384", "SHA384", 48};
    return {0, "P-256", "SHA256", 32};
  case Family::ED25519:
    return {0, nullptr, nullptr, 0};
  default:
    fail("not a classical scheme");
  }
}

Bytes bn_to_fixed(const BIGNUM* bn, size_t width)
{
  Bytes out(width);
  if (BN_bn2binpad(bn, out.data(), static_cast<int>(width)) < 0)
    fail("BN_bn2binpad");
  return out;
}

Bytes private_key_der(EVP_PKEY* pkey)
{
  unsigned char* der = nullptr;
  int len = i2d_PrivateKey(pkey, &der);
  if (len <= 0)
    fail("i2d_PrivateKey");
  Bytes out(der, der + len);
  OPENSSL_free(der);
  return out;
}

PkeyPtr parse_private_key(const AlgorithmDescriptor& alg, ByteView der)
{
  int type = EVP_PKEY_NONE;
  switch (alg.family) {
  case Family::RSA: type = EVP_PKEY_RSA; break;
  case Family::ECDSA: type = EVP_PKEY_EC; break;
  case Family::ED25519: type = EVP_PKEY_ED25519; break;
  default: fail("not a classical scheme");
  }
  const unsigned char* p = der.data();
  EVP_PKEY* pkey = d2i_PrivateKey(type, nullptr, &p, static_cast<long>(der.size()));
  if (pkey == nullptr)
    fail("cannot parse private key");
  return PkeyPtr(pkey);
}

// DNSKEY public key field formats: RFC 3110 for RSA (length-prefixed
// exponent then modulus), RFC 6605 raw x||y for ECDSA, RFC 8080 raw key
// bytes for Ed25519.
Bytes export_public(const AlgorithmDescriptor& alg, EVP_PKEY* pkey)
{
  SchemeInfo info = scheme_info(alg);
  if (alg.family == Family::RSA) {
    BIGNUM *n = nullptr, *e = nullptr;
    if (EVP_PKEY_get_bn_param(pkey, OSSL_PKEY_PARAM_RSA_N, &n) != 1 ||
        EVP_PKEY_get_bn_param(pkey, OSSL_PKEY_PARAM_RSA_E, &e) != 1)
      fail("cannot extract RSA parameters");
    Bytes exp(static_cast<size_t>(BN_num_bytes(e)));
    BN_bn2bin(e, exp.data());
    Bytes mod(static_cast<size_t>(BN_num_bytes(n)));
    BN_bn2bin(n, mod.data());
    BN_free(n);
    BN_free(e);
    if (exp.size() > 255)
      fail("RSA exponent too large");
    Bytes out;
    out.push_back(static_cast<uint8_t>(exp.size()));
    out.insert(out.end(), exp.begin(), exp.end());
    out.insert(out.end(), mod.begin(), mod.end());
    return out;
  }
  if (alg.family == Family::ECDSA) {
    BIGNUM *x = nullptr, *y = nullptr;
    if (EVP_PKEY_get_bn_param(pkey, OSSL_PKEY_PARAM_EC_PUB_X, &x) != 1 ||
        EVP_PKEY_get_bn_param(pkey, OSSL_PKEY_PARAM_EC_PUB_Y, &y) != 1)
      fail("cannot extract EC point");
    Bytes out = bn_to_fixed(x, info.field_len);
    Bytes ybytes = bn_to_fixed(y, info.field_len);
    out.insert(out.end(), ybytes.begin(), ybytes.end());
    BN_free(x);
    BN_free(y);
    return out;
  }
  size_t len = 0;
  if (EVP_PKEY_get_raw_public_key(pkey, nullptr, &len) != 1)
    fail("cannot get raw public key length");
  Bytes out(len);
  if (EVP_PKEY_get_raw_public_key(pkey, out.data(), &len) != 1)
    fail("cannot get raw public key");
  return out;
}

PkeyPtr parse_public(const AlgorithmDescriptor& alg, ByteView pub)
{
  SchemeInfo info = scheme_info(alg);
  if (alg.family == Family::RSA) {
    if (pub.size() < 4 || pub[0] == 0)
      fail("malformed RSA public key");
    size_t elen = pub[0];
    if (1 + elen >= pub.size())
      fail("malformed RSA public key");
    BIGNUM* e = BN_bin2bn(pub.data() + 1, static_cast<int>(elen), nullptr);
    BIGNUM* n = BN_bin2bn(pub.data() + 1 + elen,
                          static_cast<int>(pub.size() - 1 - elen), nullptr);
    OSSL_PARAM_BLD* bld = OSSL_PARAM_BLD_new();
    OSSL_PARAM_BLD_push_BN(bld, OSSL_PKEY_PARAM_RSA_N, n);
    OSSL_PARAM_BLD_push_BN(bld, OSSL_PKEY_PARAM_RSA_E, e);
    OSSL_PARAM* params = OSSL_PARAM_BLD_to_param(bld);
    EVP_PKEY_CTX* ctx = EVP_PKEY_CTX_new_from_name(nullptr, "RSA", nullptr);
    EVP_PKEY* pkey = nullptr;
    if (ctx == nullptr || EVP_PKEY_fromdata_init(ctx) != 1 ||
        EVP_PKEY_fromdata(ctx, &pkey, EVP_PKEY_PUBLIC_KEY, params) != 1)
      pkey = nullptr;
    EVP_PKEY_CTX_free(ctx);
    OSSL_PARAM_free(params);
    OSSL_PARAM_BLD_free(bld);
    BN_free(n);
    BN_free(e);
    if (pkey == nullptr)
      fail("cannot build RSA public key");
    return PkeyPtr(pkey);
  }
  if (alg.family == Family::ECDSA) {
    if (pub.size() != 2 * info.field_len)
      fail("bad ECDSA public key length");
    Bytes point;
    point.push_back(0x04);
    point.insert(point.end(), pub.begin(), pub.end());
    OSSL_PARAM_BLD* bld = OSSL_PARAM_BLD_new();
    OSSL_PARAM_BLD_push_utf8_string(bld, OSSL_PKEY_PARAM_GROUP_NAME,
                                    info.curve, 0);
    OSSL_PARAM_BLD_push_octet_string(bld, OSSL_PKEY_PARAM_PUB_KEY,
                                     point.data(), point.size());
    OSSL_PARAM* params = OSSL_PARAM_BLD_to_param(bld);
    EVP_PKEY_CTX* ctx = EVP_PKEY_CTX_new_from_name(nullptr, "EC", nullptr);
    EVP_PKEY* pkey = nullptr;
    if (ctx == nullptr || EVP_PKEY_fromdata_init(ctx) != 1 ||
        EVP_PKEY_fromdata(ctx, &pkey, EVP_PKEY_PUBLIC_KEY, params) != 1)
      pkey = nullptr;
    EVP_PKEY_CTX_free(ctx);
    OSSL_PARAM_free(params);
    OSSL_PARAM_BLD_free(bld);
    if (pkey == nullptr)
      fail("cannot build EC public key");
    return PkeyPtr(pkey);
  }
  EVP_PKEY* pkey = EVP_PKEY_new_raw_public_key(
    EVP_PKEY_ED25519, nullptr, pub.data(), pub.size());
  if (pkey == nullptr)
    fail("cannot build Ed25519 public key");
  return PkeyPtr(pkey);
}

// DNSSEC carries ECDSA signatures as fixed-width r||s rather than DER.
Bytes ecdsa_der_to_raw(ByteView der, size_t field_len)
{
  const unsigned char* p = der.data();
  ECDSA_SIG* sig = d2i_ECDSA_SIG(nullptr, &p, static_cast<long>(der.size()));
  if (sig == nullptr)
    fail("cannot parse ECDSA signature");
  const BIGNUM *r = nullptr, *s = nullptr;
  ECDSA_SIG_get0(sig, &r, &s);
  Bytes out = bn_to_fixed(r, field_len);
  Bytes sb = bn_to_fixed(s, field_len);
  out.insert(out.end(), sb.begin(), sb.end());
  ECDSA_SIG_free(sig);
  return out;
}

Bytes ecdsa_raw_to_der(ByteView raw, size_t field_len)
{
  if (raw.size() != 2 * field_len)
    return {};
  BIGNUM* r = BN_bin2bn(raw.data(), static_cast<int>(field_len), nullptr);
  BIGNUM* s = BN_bin2bn(raw.data() + field_len, static_cast<int>(field_len), nullptr);
  ECDSA_SIG* sig = ECDSA_SIG_new();
  ECDSA_SIG_set0(sig, r, s);
  unsigned char* der = nullptr;
  int len = i2d_ECDSA_SIG(sig, &der);
  ECDSA_SIG_free(sig);
  if (len <= 0)
    return {};
  Bytes out(der, der + len);
  OPENSSL_free(der);
  return out;
}

class ClassicalBackend final : public SignatureBackend {
public:
  Bytes keypair_public(const AlgorithmDescriptor& alg,
                       std::optional<ByteView> seed,
                       Bytes& private_key) const override
  {
    if (seed)
      throw std::invalid_argument("seeded key generation is not supported for " +
                                  alg.mnemonic);
    SchemeInfo info = scheme_info(alg);
    PkeyPtr pkey;
    if (alg.family == Family::RSA) {
      pkey.reset(EVP_PKEY_Q_keygen(nullptr, nullptr, "RSA",
                                   static_cast<size_t>(info.rsa_bits)));
    } else if (alg.family == Family::ECDSA) {
      pkey.reset(EVP_PKEY_Q_keygen(nullptr, nullptr, "EC", info.curve));
    } else {
      pkey.reset(EVP_PKEY_Q_keygen(nullptr, nullptr, "ED25519"));
    }
    if (!pkey)
      fail("key generation failed");
    private_key = private_key_der(pkey.get());
    return export_public(alg, pkey.get());
  }

  Bytes sign(const AlgorithmDescriptor& alg, ByteView private_key,
             ByteView message) const override
  {
    SchemeInfo info = scheme_info(alg);
    PkeyPtr pkey = parse_private_key(alg, private_key);
    MdCtxPtr ctx(EVP_MD_CTX_new());
    if (!ctx)
      fail("EVP_MD_CTX_new");
    if (EVP_DigestSignInit_ex(ctx.get(), nullptr, info.digest, nullptr,
                              nullptr, pkey.get(), nullptr) != 1)
      fail("EVP_DigestSignInit");
    size_t siglen = 0;
    if (EVP_DigestSign(ctx.get(), nullptr, &siglen, message.data(),
                       message.size()) != 1)
      fail("EVP_DigestSign sizing");
    Bytes sig(siglen);
    if (EVP_DigestSign(ctx.get(), sig.data(), &siglen, message.data(),
                       message.size()) != 1)
      fail("EVP_DigestSign");
    sig.resize(siglen);
    if (alg.family == Family::ECDSA)
      return ecdsa_der_to_raw(sig, info.field_len);
    return sig;
  }

  bool verify(const AlgorithmDescriptor& alg, ByteView public_key,
              ByteView message, ByteView signature) const override
  {
    SchemeInfo info = scheme_info(alg);
    PkeyPtr pkey;
    try {
      pkey = parse_public(alg, public_key);
    } catch (const ProviderError&) {
      return false;
    }
    Bytes sig_buf;
    ByteView sig = signature;
    if (alg.family == Family::ECDSA) {
      sig_buf = ecdsa_raw_to_der(signature, info.field_len);
      if (sig_buf.empty())
        return false;
      sig = sig_buf;
    }
    MdCtxPtr ctx(EVP_MD_CTX_new());
    if (!ctx)
      fail("EVP_MD_CTX_new");
    if (EVP_DigestVerifyInit_ex(ctx.get(), nullptr, info.digest, nullptr,
                                nullptr, pkey.get(), nullptr) != 1)
      fail("EVP_DigestVerifyInit");
    int rc = EVP_DigestVerify(ctx.get(), sig.data(), sig.size(),
                              message.data(), message.size());
    if (rc != 1)
      ERR_clear_error();
    return rc == 1;
  }
};

} // namespace

std::unique_ptr<SignatureBackend> make_classical_backend()
{
  return std::make_unique<ClassicalBackend>();
}

} // namespace pqdns::crypto
