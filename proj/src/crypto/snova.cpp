// Copyright (c) 2026 The pqdns Authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "snova.hpp"

#include "gf16.hpp"
#include "rng.hpp"
#include "xof.hpp"

#include <array>
#include <cstring>
#include <stdexcept>

namespace pqdns::crypto::snova {

namespace {

using gf16::mul;

constexpr int L = 4;   // ring elements are L x L matrices over GF(16)
constexpr int L2 = 16; // scalar entries per ring element
constexpr int V = 24;  // vinegar variables
constexpr int O = 5;   // oil variables
constexpr int M = O;   // ring-valued equations
constexpr int N = V + O;
constexpr size_t SEED_PK = 16;
constexpr size_t SEED_SK = 32;
constexpr size_t SALT = 16;
constexpr size_t DIGEST = 32;

using Ring = std::array<uint8_t, L2>; // row-major L x L

Ring ring_zero()
{
  return Ring{};
}

Ring ring_mul(const Ring& a, const Ring& b)
{
  Ring c{};
  for (int r = 0; r < L; ++r) {
    for (int i = 0; i < L; ++i) {
      uint8_t av = a[static_cast<size_t>(r) * L + i];
      if (av == 0)
        continue;
      const uint8_t* brow = &b[static_cast<size_t>(i) * L];
      uint8_t* crow = &c[static_cast<size_t>(r) * L];
      for (int col = 0; col < L; ++col)
        crow[col] ^= mul(av, brow[col]);
    }
  }
  return c;
}

void ring_acc(Ring& a, const Ring& b)
{
  for (int i = 0; i < L2; ++i)
    a[static_cast<size_t>(i)] ^= b[static_cast<size_t>(i)];
}

Ring ring_transpose(const Ring& a)
{
  Ring t{};
  for (int r = 0; r < L; ++r)
    for (int c = 0; c < L; ++c)
      t[static_cast<size_t>(c) * L + r] = a[static_cast<size_t>(r) * L + c];
  return t;
}

} // namespace

// Symmetric with an irreducible characteristic polynomial over GF(16), so
// GF(16)[S] is a field and polynomials in S are transpose-invariant.
const uint8_t S_MATRIX[4][4] = {
  {9, 5, 3, 6},
  {5, 11, 3, 2},
  {3, 3, 1, 6},
  {6, 2, 6, 15},
};

namespace {

const std::array<Ring, 4>& s_powers()
{
  static const std::array<Ring, 4> powers = [] {
    std::array<Ring, 4> p{};
    for (int i = 0; i < L; ++i)
      p[0][static_cast<size_t>(i) * L + i] = 1; // identity
    for (int r = 0; r < L; ++r)
      for (int c = 0; c < L; ++c)
        p[1][static_cast<size_t>(r) * L + c] = S_MATRIX[r][c];
    p[2] = ring_mul(p[1], p[1]);
    p[3] = ring_mul(p[2], p[1]);
    return p;
  }();
  return powers;
}

// Element of GF(16)[S] from four polynomial coefficients.
Ring poly_in_s(const uint8_t coeff[4])
{
  const auto& pw = s_powers();
  Ring out{};
  for (int d = 0; d < 4; ++d) {
    if (coeff[d] == 0)
      continue;
    for (int i = 0; i < L2; ++i)
      out[static_cast<size_t>(i)] ^= mul(coeff[d], pw[static_cast<size_t>(d)][static_cast<size_t>(i)]);
  }
  return out;
}

struct Abq {
  std::array<Ring, L2> a, b, q1, q2;
};

// A, B, Q1, Q2 are nonzero elements of GF(16)[S] derived from the public
// seed; nonzero suffices for invertibility since GF(16)[S] is a field.
Abq derive_abq(ByteView seed_pk)
{
  Bytes input = concat({to_bytes("snova-abq"), seed_pk});
  Bytes stream(4 * L2 * 2 + 64); // headroom for redraws
  shake256_expand(input, stream.data(), stream.size());
  size_t pos = 0;
  auto draw = [&]() {
    while (true) {
      if (pos + 2 > stream.size())
        throw std::runtime_error("snova: ABQ derivation exhausted");
      uint8_t coeff[4] = {
        static_cast<uint8_t>(stream[pos] & 0x0f),
        static_cast<uint8_t>(stream[pos] >> 4),
        static_cast<uint8_t>(stream[pos + 1] & 0x0f),
        static_cast<uint8_t>(stream[pos + 1] >> 4),
      };
      pos += 2;
      if (coeff[0] | coeff[1] | coeff[2] | coeff[3])
        return poly_in_s(coeff);
    }
  };
  Abq out;
  for (int i = 0; i < L2; ++i)
    out.a[static_cast<size_t>(i)] = draw();
  for (int i = 0; i < L2; ++i)
    out.b[static_cast<size_t>(i)] = draw();
  for (int i = 0; i < L2; ++i)
    out.q1[static_cast<size_t>(i)] = draw();
  for (int i = 0; i < L2; ++i)
    out.q2[static_cast<size_t>(i)] = draw();
  return out;
}

struct PublicMatrices {
  // Ring-valued blocks of the public quadratic forms, one set per equation.
  std::vector<Ring> p11; // [ (k*V + i)*V + j ]
  std::vector<Ring> p12; // [ (k*V + i)*O + a ]
  std::vector<Ring> p21; // [ (k*O + a)*V + j ]
};

PublicMatrices expand_public(PublicXof xof, ByteView seed_pk)
{
  constexpr size_t n_elems =
    static_cast<size_t>(M) * (V * V + V * O + O * V);
  Bytes stream(n_elems * L2 / 2);
  if (xof == PublicXof::Aes128Ctr)
    aes128ctr_expand(seed_pk.data(), stream.data(), stream.size());
  else
    shake128_expand(seed_pk, stream.data(), stream.size());

  PublicMatrices out;
  out.p11.resize(static_cast<size_t>(M) * V * V);
  out.p12.resize(static_cast<size_t>(M) * V * O);
  out.p21.resize(static_cast<size_t>(M) * O * V);
  gf16::NibbleReader r(stream.data());
  auto fill = [&](std::vector<Ring>& v) {
    for (Ring& e : v)
      for (int i = 0; i < L2; ++i)
        e[static_cast<size_t>(i)] = r.next();
  };
  fill(out.p11);
  fill(out.p12);
  fill(out.p21);
  return out;
}

// T12 entries live in GF(16)[S] so they commute with A/B/Q and are
// transpose-invariant, which is what makes the oil-and-vinegar trapdoor work
// under the ring structure.
std::vector<Ring> derive_t12(ByteView seed_sk)
{
  Bytes input = concat({to_bytes("snova-t12"), seed_sk});
  Bytes stream(static_cast<size_t>(V) * O * 2);
  shake256_expand(input, stream.data(), stream.size());
  std::vector<Ring> t12(static_cast<size_t>(V) * O);
  for (size_t e = 0; e < t12.size(); ++e) {
    uint8_t coeff[4] = {
      static_cast<uint8_t>(stream[e * 2] & 0x0f),
      static_cast<uint8_t>(stream[e * 2] >> 4),
      static_cast<uint8_t>(stream[e * 2 + 1] & 0x0f),
      static_cast<uint8_t>(stream[e * 2 + 1] >> 4),
    };
    t12[e] = poly_in_s(coeff);
  }
  return t12;
}

std::array<Ring, M> message_target(ByteView digest, ByteView salt)
{
  Bytes input = concat({to_bytes("snova-hash"), digest, salt});
  Bytes stream(static_cast<size_t>(M) * L2 / 2);
  shake256_expand(input, stream.data(), stream.size());
  std::array<Ring, M> h{};
  gf16::NibbleReader r(stream.data());
  for (int k = 0; k < M; ++k)
    for (int i = 0; i < L2; ++i)
      h[static_cast<size_t>(k)][static_cast<size_t>(i)] = r.next();
  return h;
}

void pack_ring_seq(const Ring* elems, size_t count, uint8_t* out)
{
  std::vector<uint8_t> nibbles(count * L2);
  for (size_t e = 0; e < count; ++e)
    std::copy(elems[e].begin(), elems[e].end(), nibbles.begin() + static_cast<ptrdiff_t>(e * L2));
  gf16::pack_nibbles(nibbles.data(), nibbles.size(), out);
}

void unpack_ring_seq(const uint8_t* data, Ring* elems, size_t count)
{
  std::vector<uint8_t> nibbles(count * L2);
  gf16::unpack_nibbles(data, nibbles.size(), nibbles.data());
  for (size_t e = 0; e < count; ++e)
    std::copy_n(nibbles.begin() + static_cast<ptrdiff_t>(e * L2), L2, elems[e].begin());
}

} // namespace

void keypair(PublicXof xof, uint8_t* public_key, uint8_t* private_key)
{
  random_fill(private_key, PRIVATE_KEY_BYTES);
  ByteView seed_pk(private_key, SEED_PK);
  ByteView seed_sk(private_key + SEED_PK, SEED_SK);

  PublicMatrices pm = expand_public(xof, seed_pk);
  std::vector<Ring> t12 = derive_t12(seed_sk);

  // P22 = T12^T P11 T12 + T12^T P12 + P21 T12, which zeroes the oil-oil
  // block of the composed secret map.
  std::vector<Ring> p22(static_cast<size_t>(M) * O * O, ring_zero());
  std::vector<Ring> g(static_cast<size_t>(V) * O);
  for (int k = 0; k < M; ++k) {
    for (int i = 0; i < V; ++i) {
      for (int b = 0; b < O; ++b) {
        Ring acc = ring_zero();
        for (int j = 0; j < V; ++j)
          ring_acc(acc, ring_mul(pm.p11[(static_cast<size_t>(k) * V + i) * V + j],
                                 t12[static_cast<size_t>(j) * O + b]));
        g[static_cast<size_t>(i) * O + b] = acc;
      }
    }
    for (int a = 0; a < O; ++a) {
      for (int b = 0; b < O; ++b) {
        Ring acc = ring_zero();
        for (int i = 0; i < V; ++i) {
          ring_acc(acc, ring_mul(t12[static_cast<size_t>(i) * O + a],
                                 g[static_cast<size_t>(i) * O + b]));
          ring_acc(acc, ring_mul(t12[static_cast<size_t>(i) * O + a],
                                 pm.p12[(static_cast<size_t>(k) * V + i) * O + b]));
        }
        for (int j = 0; j < V; ++j)
          ring_acc(acc, ring_mul(pm.p21[(static_cast<size_t>(k) * O + a) * V + j],
                                 t12[static_cast<size_t>(j) * O + b]));
        p22[(static_cast<size_t>(k) * O + a) * O + b] = acc;
      }
    }
  }

  std::memcpy(public_key, seed_pk.data(), SEED_PK);
  pack_ring_seq(p22.data(), p22.size(), public_key + SEED_PK);
}

Bytes sign(PublicXof xof, ByteView private_key, ByteView message)
{
  if (private_key.size() != PRIVATE_KEY_BYTES)
    throw std::runtime_error("snova: bad private key length");
  ByteView seed_pk = private_key.subspan(0, SEED_PK);
  ByteView seed_sk = private_key.subspan(SEED_PK, SEED_SK);

  PublicMatrices pm = expand_public(xof, seed_pk);
  std::vector<Ring> t12 = derive_t12(seed_sk);
  Abq abq = derive_abq(seed_pk);

  // Secret map blocks: F11 = P11, F12 = P11 T12 + P12, F21 = T12^T P11 + P21.
  std::vector<Ring> f12(static_cast<size_t>(M) * V * O);
  std::vector<Ring> f21(static_cast<size_t>(M) * O * V);
  for (int k = 0; k < M; ++k) {
    for (int i = 0; i < V; ++i) {
      for (int b = 0; b < O; ++b) {
        Ring acc = pm.p12[(static_cast<size_t>(k) * V + i) * O + b];
        for (int j = 0; j < V; ++j)
          ring_acc(acc, ring_mul(pm.p11[(static_cast<size_t>(k) * V + i) * V + j],
                                 t12[static_cast<size_t>(j) * O + b]));
        f12[(static_cast<size_t>(k) * V + i) * O + b] = acc;
      }
    }
    for (int a = 0; a < O; ++a) {
      for (int j = 0; j < V; ++j) {
        Ring acc = pm.p21[(static_cast<size_t>(k) * O + a) * V + j];
        for (int i = 0; i < V; ++i)
          ring_acc(acc, ring_mul(t12[static_cast<size_t>(i) * O + a],
                                 pm.p11[(static_cast<size_t>(k) * V + i) * V + j]));
        f21[(static_cast<size_t>(k) * O + a) * V + j] = acc;
      }
    }
  }

  Bytes digest(DIGEST);
  shake256_expand(message, digest.data(), digest.size());

  constexpr size_t UNKNOWNS = static_cast<size_t>(O) * L2; // 80 scalars
  std::vector<uint8_t> mat;
  std::vector<uint8_t> rhs;
  std::vector<uint8_t> sol;

  for (int attempt = 0; attempt < 256; ++attempt) {
    Bytes salt = random_bytes(SALT);
    std::array<Ring, M> target = message_target(digest, salt);

    std::array<Ring, V> vin;
    for (Ring& e : vin) {
      Bytes raw = random_bytes(L2 / 2);
      gf16::unpack_nibbles(raw.data(), L2, e.data());
    }

    // LV[alpha][i] = V_i^T Q1_alpha, RV[alpha][j] = Q2_alpha V_j.
    std::vector<Ring> lv(static_cast<size_t>(L2) * V);
    std::vector<Ring> rv(static_cast<size_t>(L2) * V);
    for (int al = 0; al < L2; ++al) {
      for (int i = 0; i < V; ++i) {
        lv[static_cast<size_t>(al) * V + i] =
          ring_mul(ring_transpose(vin[static_cast<size_t>(i)]), abq.q1[static_cast<size_t>(al)]);
        rv[static_cast<size_t>(al) * V + i] =
          ring_mul(abq.q2[static_cast<size_t>(al)], vin[static_cast<size_t>(i)]);
      }
    }

    mat.assign(static_cast<size_t>(M) * L2 * UNKNOWNS, 0);
    rhs.assign(static_cast<size_t>(M) * L2, 0);

    for (int k = 0; k < M; ++k) {
      Ring rhs_k = target[static_cast<size_t>(k)];
      for (int al = 0; al < L2; ++al) {
        const Ring& a_al = abq.a[static_cast<size_t>(al)];
        const Ring& b_al = abq.b[static_cast<size_t>(al)];

        // Vinegar-vinegar constant.
        Ring acc = ring_zero();
        for (int i = 0; i < V; ++i) {
          Ring inner = ring_zero();
          for (int j = 0; j < V; ++j)
            ring_acc(inner, ring_mul(pm.p11[(static_cast<size_t>(k) * V + i) * V + j],
                                     rv[static_cast<size_t>(al) * V + j]));
          ring_acc(acc, ring_mul(lv[static_cast<size_t>(al) * V + i], inner));
        }
        ring_acc(rhs_k, ring_mul(ring_mul(a_al, acc), b_al));

        for (int a = 0; a < O; ++a) {
          // W1 = (sum_i LV_i F12[i][a]) Q2 ; contribution A W1 O_a B.
          Ring w1 = ring_zero();
          for (int i = 0; i < V; ++i)
            ring_acc(w1, ring_mul(lv[static_cast<size_t>(al) * V + i],
                                  f12[(static_cast<size_t>(k) * V + i) * O + a]));
          w1 = ring_mul(w1, abq.q2[static_cast<size_t>(al)]);
          Ring m1 = ring_mul(a_al, w1);
          for (int s = 0; s < L; ++s) {
            for (int t = 0; t < L; ++t) {
              size_t row = (static_cast<size_t>(k) * L + s) * L + t;
              uint8_t* mrow = &mat[row * UNKNOWNS + static_cast<size_t>(a) * L2];
              for (int r = 0; r < L; ++r) {
                uint8_t m1v = m1[static_cast<size_t>(s) * L + r];
                if (m1v == 0)
                  continue;
                for (int c = 0; c < L; ++c)
                  mrow[r * L + c] ^= mul(m1v, b_al[static_cast<size_t>(c) * L + t]);
              }
            }
          }

          // W2 = Q1 (sum_j F21[a][j] RV_j) ; contribution A O_a^T (W2 B).
          Ring w2 = ring_zero();
          for (int j = 0; j < V; ++j)
            ring_acc(w2, ring_mul(f21[(static_cast<size_t>(k) * O + a) * V + j],
                                  rv[static_cast<size_t>(al) * V + j]));
          w2 = ring_mul(abq.q1[static_cast<size_t>(al)], w2);
          Ring kk = ring_mul(w2, b_al);
          for (int s = 0; s < L; ++s) {
            for (int t = 0; t < L; ++t) {
              size_t row = (static_cast<size_t>(k) * L + s) * L + t;
              uint8_t* mrow = &mat[row * UNKNOWNS + static_cast<size_t>(a) * L2];
              for (int u = 0; u < L; ++u) {
                uint8_t av = a_al[static_cast<size_t>(s) * L + u];
                if (av == 0)
                  continue;
                for (int w = 0; w < L; ++w)
                  mrow[w * L + u] ^= mul(av, kk[static_cast<size_t>(w) * L + t]);
              }
            }
          }
        }
      }
      for (int s = 0; s < L; ++s)
        for (int t = 0; t < L; ++t)
          rhs[(static_cast<size_t>(k) * L + s) * L + t] = rhs_k[static_cast<size_t>(s) * L + t];
    }

    if (!gf16::solve(mat, rhs, static_cast<size_t>(M) * L2, UNKNOWNS, sol))
      continue;

    std::array<Ring, O> oil;
    for (int a = 0; a < O; ++a)
      std::copy_n(sol.begin() + static_cast<ptrdiff_t>(a * L2), L2,
                  oil[static_cast<size_t>(a)].begin());

    std::array<Ring, N> u;
    for (int i = 0; i < V; ++i) {
      Ring acc = vin[static_cast<size_t>(i)];
      for (int a = 0; a < O; ++a)
        ring_acc(acc, ring_mul(t12[static_cast<size_t>(i) * O + a], oil[static_cast<size_t>(a)]));
      u[static_cast<size_t>(i)] = acc;
    }
    for (int a = 0; a < O; ++a)
      u[static_cast<size_t>(V + a)] = oil[static_cast<size_t>(a)];

    Bytes sig(SIGNATURE_BYTES);
    pack_ring_seq(u.data(), u.size(), sig.data());
    std::memcpy(sig.data() + (static_cast<size_t>(N) * L2) / 2, salt.data(), SALT);
    return sig;
  }
  throw std::runtime_error("snova: no solvable system after 256 attempts");
}

bool verify(PublicXof xof, ByteView public_key, ByteView message,
            ByteView signature)
{
  if (public_key.size() != PUBLIC_KEY_BYTES ||
      signature.size() != SIGNATURE_BYTES)
    return false;

  ByteView seed_pk = public_key.subspan(0, SEED_PK);
  PublicMatrices pm = expand_public(xof, seed_pk);
  std::vector<Ring> p22(static_cast<size_t>(M) * O * O);
  unpack_ring_seq(public_key.data() + SEED_PK, p22.data(), p22.size());
  Abq abq = derive_abq(seed_pk);

  std::array<Ring, N> u;
  unpack_ring_seq(signature.data(), u.data(), u.size());
  ByteView salt = signature.subspan(static_cast<size_t>(N) * L2 / 2, SALT);

  Bytes digest(DIGEST);
  shake256_expand(message, digest.data(), digest.size());
  std::array<Ring, M> target = message_target(digest, salt);

  auto p_block = [&](int k, int i, int j) -> const Ring& {
    if (i < V) {
      if (j < V)
        return pm.p11[(static_cast<size_t>(k) * V + i) * V + j];
      return pm.p12[(static_cast<size_t>(k) * V + i) * O + (j - V)];
    }
    if (j < V)
      return pm.p21[(static_cast<size_t>(k) * O + (i - V)) * V + j];
    return p22[(static_cast<size_t>(k) * O + (i - V)) * O + (j - V)];
  };

  std::vector<Ring> lu(static_cast<size_t>(L2) * N);
  std::vector<Ring> ru(static_cast<size_t>(L2) * N);
  for (int al = 0; al < L2; ++al) {
    for (int i = 0; i < N; ++i) {
      lu[static_cast<size_t>(al) * N + i] =
        ring_mul(ring_transpose(u[static_cast<size_t>(i)]), abq.q1[static_cast<size_t>(al)]);
      ru[static_cast<size_t>(al) * N + i] =
        ring_mul(abq.q2[static_cast<size_t>(al)], u[static_cast<size_t>(i)]);
    }
  }

  for (int k = 0; k < M; ++k) {
    Ring val = ring_zero();
    for (int al = 0; al < L2; ++al) {
      Ring acc = ring_zero();
      for (int i = 0; i < N; ++i) {
        Ring inner = ring_zero();
        for (int j = 0; j < N; ++j)
          ring_acc(inner, ring_mul(p_block(k, i, j), ru[static_cast<size_t>(al) * N + j]));
        ring_acc(acc, ring_mul(lu[static_cast<size_t>(al) * N + i], inner));
      }
      ring_acc(val, ring_mul(ring_mul(abq.a[static_cast<size_t>(al)], acc),
                             abq.b[static_cast<size_t>(al)]));
    }
    if (val != target[static_cast<size_t>(k)])
      return false;
  }
  return true;
}

} // namespace pqdns::crypto::snova
