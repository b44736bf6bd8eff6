// Copyright (c) 2026 The pqdns Authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "backends.hpp"
#include "mayo.hpp"
#include "rng.hpp"
#include "snova.hpp"

namespace pqdns::crypto {

namespace {

class MultivariateBackend final : public SignatureBackend {
public:
  Bytes keypair_public(const AlgorithmDescriptor& alg,
                       std::optional<ByteView> seed,
                       Bytes& private_key) const override
  {
    auto generate = [&]() -> Bytes {
      if (alg.family == Family::MAYO) {
        const mayo::Params& p = params(alg);
        Bytes pub(p.public_key_bytes());
        private_key.resize(p.private_key_bytes());
        mayo::keypair(p, pub.data(), private_key.data());
        return pub;
      }
      Bytes pub(snova::PUBLIC_KEY_BYTES);
      private_key.resize(snova::PRIVATE_KEY_BYTES);
      snova::keypair(xof(alg), pub.data(), private_key.data());
      return pub;
    };
    if (seed) {
      DeterministicRng rng(*seed);
      ScopedRngOverride guard(rng);
      return generate();
    }
    return generate();
  }

  Bytes sign(const AlgorithmDescriptor& alg, ByteView private_key,
             ByteView message) const override
  {
    try {
      if (alg.family == Family::MAYO)
        return mayo::sign(params(alg), private_key, message);
      return snova::sign(xof(alg), private_key, message);
    } catch (const std::runtime_error& e) {
      throw ProviderError(alg.mnemonic + ": " + e.what());
    }
  }

  bool verify(const AlgorithmDescriptor& alg, ByteView public_key,
              ByteView message, ByteView signature) const override
  {
    if (alg.family == Family::MAYO)
      return mayo::verify(params(alg), public_key, message, signature);
    return snova::verify(xof(alg), public_key, message, signature);
  }

private:
  static const mayo::Params& params(const AlgorithmDescriptor& alg)
  {
    return alg.mnemonic == "MAYO3" ? mayo::mayo3() : mayo::mayo1();
  }

  static snova::PublicXof xof(const AlgorithmDescriptor& alg)
  {
    return alg.mnemonic == "SNOVA2454SHAKE" ? snova::PublicXof::Shake128
                                            : snova::PublicXof::Aes128Ctr;
  }
};

} // namespace

std::unique_ptr<SignatureBackend> make_multivariate_backend()
{
  return std::make_unique<MultivariateBackend>();
}

} // namespace pqdns::crypto
