// Copyright (c) 2026 The pqdns Authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "mayo.hpp"

#include "gf16.hpp"
#include "rng.hpp"
#include "xof.hpp"

#include <cstring>
#include <stdexcept>

namespace pqdns::crypto::mayo {

namespace {

using gf16::mul;

// Multiplies an m-coefficient vector by z in F16[z]/(z^m + z^3 + z + 1).
void mul_z(uint8_t* vec, int m)
{
  uint8_t carry = vec[m - 1];
  std::memmove(vec + 1, vec, static_cast<size_t>(m - 1));
  vec[0] = carry;
  vec[1] ^= carry;
  vec[3] ^= carry;
}

void apply_z_pow(uint8_t* vec, int m, int power)
{
  for (int i = 0; i < power; ++i)
    mul_z(vec, m);
}

struct ExpandedPublic {
  std::vector<uint8_t> p1; // [pair(a<=b over v) * m + eq]
  std::vector<uint8_t> p2; // [(a * o + b) * m + eq]
};

size_t p1_pairs(const Params& p)
{
  return static_cast<size_t>(p.v()) * (p.v() + 1) / 2;
}

size_t p3_pairs(const Params& p)
{
  return static_cast<size_t>(p.o) * (p.o + 1) / 2;
}

ExpandedPublic expand_public(const Params& p, const uint8_t seed_pk[16])
{
  size_t n1 = p1_pairs(p) * static_cast<size_t>(p.m);
  size_t n2 = static_cast<size_t>(p.v()) * p.o * p.m;
  Bytes stream((n1 + n2 + 1) / 2);
  aes128ctr_expand(seed_pk, stream.data(), stream.size());
  ExpandedPublic out;
  out.p1.resize(n1);
  out.p2.resize(n2);
  gf16::unpack_nibbles(stream.data(), n1, out.p1.data());
  std::vector<uint8_t> rest(n2);
  gf16::NibbleReader r(stream.data());
  for (size_t i = 0; i < n1; ++i)
    r.next();
  for (size_t i = 0; i < n2; ++i)
    rest[i] = r.next();
  out.p2 = std::move(rest);
  return out;
}

struct ExpandedSecret {
  uint8_t seed_pk[16];
  std::vector<uint8_t> oil; // O[i * o + b], i < v, b < o
};

ExpandedSecret expand_secret(const Params& p, ByteView sk)
{
  size_t on = static_cast<size_t>(p.v()) * p.o;
  Bytes stream(16 + (on + 1) / 2);
  shake256_expand(sk, stream.data(), stream.size());
  ExpandedSecret out;
  std::memcpy(out.seed_pk, stream.data(), 16);
  out.oil.resize(on);
  gf16::unpack_nibbles(stream.data() + 16, on, out.oil.data());
  return out;
}

// Hash target: m nibbles from SHAKE256(SHAKE256(msg) || salt).
std::vector<uint8_t> message_target(const Params& p, ByteView message,
                                    ByteView salt)
{
  Bytes digest(p.digest_bytes);
  shake256_expand(message, digest.data(), digest.size());
  Bytes input = concat({digest, salt});
  Bytes stream((static_cast<size_t>(p.m) + 1) / 2);
  shake256_expand(input, stream.data(), stream.size());
  std::vector<uint8_t> t(static_cast<size_t>(p.m));
  gf16::unpack_nibbles(stream.data(), t.size(), t.data());
  return t;
}

} // namespace

const Params& mayo1()
{
  static const Params p{86, 78, 8, 10, 24, 24, 32};
  return p;
}

const Params& mayo3()
{
  static const Params p{118, 108, 10, 11, 32, 32, 48};
  return p;
}

void keypair(const Params& p, uint8_t* public_key, uint8_t* private_key)
{
  random_fill(private_key, p.sk_seed_bytes);
  ExpandedSecret sec = expand_secret(p, ByteView(private_key, p.sk_seed_bytes));
  ExpandedPublic pub = expand_public(p, sec.seed_pk);

  const int v = p.v(), o = p.o, m = p.m;

  // P3 = Upper(O^T P1 O + O^T P2), computed per equation.
  std::vector<uint8_t> p3(p3_pairs(p) * static_cast<size_t>(m));
  std::vector<uint8_t> p1k(static_cast<size_t>(v) * v);
  std::vector<uint8_t> t1(static_cast<size_t>(v) * o);
  std::vector<uint8_t> mm(static_cast<size_t>(o) * o);
  for (int eq = 0; eq < m; ++eq) {
    std::fill(p1k.begin(), p1k.end(), 0);
    size_t pair = 0;
    for (int a = 0; a < v; ++a)
      for (int b = a; b < v; ++b, ++pair)
        p1k[static_cast<size_t>(a) * v + b] = pub.p1[pair * m + eq];

    // t1 = P1_k * O
    std::fill(t1.begin(), t1.end(), 0);
    for (int a = 0; a < v; ++a) {
      for (int j = 0; j < v; ++j) {
        uint8_t c = p1k[static_cast<size_t>(a) * v + j];
        if (c == 0)
          continue;
        const uint8_t* orow = &sec.oil[static_cast<size_t>(j) * o];
        uint8_t* trow = &t1[static_cast<size_t>(a) * o];
        for (int b = 0; b < o; ++b)
          trow[b] ^= mul(c, orow[b]);
      }
    }
    // mm = O^T * t1 + O^T * P2_k
    std::fill(mm.begin(), mm.end(), 0);
    for (int i = 0; i < v; ++i) {
      const uint8_t* orow = &sec.oil[static_cast<size_t>(i) * o];
      const uint8_t* trow = &t1[static_cast<size_t>(i) * o];
      for (int a = 0; a < o; ++a) {
        uint8_t oa = orow[a];
        if (oa == 0)
          continue;
        for (int b = 0; b < o; ++b)
          mm[static_cast<size_t>(a) * o + b] ^= mul(oa, trow[b]);
      }
    }
    for (int i = 0; i < v; ++i) {
      const uint8_t* orow = &sec.oil[static_cast<size_t>(i) * o];
      for (int b = 0; b < o; ++b) {
        uint8_t c = pub.p2[(static_cast<size_t>(i) * o + b) * m + eq];
        if (c == 0)
          continue;
        for (int a = 0; a < o; ++a)
          mm[static_cast<size_t>(a) * o + b] ^= mul(orow[a], c);
      }
    }
    size_t p3pair = 0;
    for (int a = 0; a < o; ++a) {
      for (int b = a; b < o; ++b, ++p3pair) {
        uint8_t val = (a == b)
          ? mm[static_cast<size_t>(a) * o + a]
          : static_cast<uint8_t>(mm[static_cast<size_t>(a) * o + b] ^
                                 mm[static_cast<size_t>(b) * o + a]);
        p3[p3pair * static_cast<size_t>(m) + eq] = val;
      }
    }
  }

  std::memcpy(public_key, sec.seed_pk, 16);
  gf16::pack_nibbles(p3.data(), p3.size(), public_key + 16);
}

Bytes sign(const Params& p, ByteView private_key, ByteView message)
{
  if (private_key.size() != p.sk_seed_bytes)
    throw std::runtime_error("mayo: bad private key length");

  const int v = p.v(), o = p.o, m = p.m, k = p.k;
  ExpandedSecret sec = expand_secret(p, private_key);
  ExpandedPublic pub = expand_public(p, sec.seed_pk);

  const size_t cols = static_cast<size_t>(k) * o;
  std::vector<uint8_t> vin(static_cast<size_t>(k) * v);
  std::vector<uint8_t> w(static_cast<size_t>(m) * v);
  std::vector<uint8_t> consts(static_cast<size_t>(k) * m);
  std::vector<uint8_t> rmat(static_cast<size_t>(k) * m * o);
  std::vector<uint8_t> a;
  std::vector<uint8_t> y;
  std::vector<uint8_t> sol;
  std::vector<uint8_t> tmp(static_cast<size_t>(m));

  for (int attempt = 0; attempt < 256; ++attempt) {
    Bytes salt = random_bytes(p.salt_bytes);
    std::vector<uint8_t> target = message_target(p, message, salt);

    for (auto& b : vin) {
      uint8_t nib[1];
      random_fill(nib, 1);
      b = nib[0] & 0x0f;
    }

    a.assign(static_cast<size_t>(m) * cols, 0);
    y.assign(target.begin(), target.end());
    std::fill(consts.begin(), consts.end(), 0);
    std::fill(rmat.begin(), rmat.end(), 0);

    // Per x_i: constant c_i = Q(v_i), polar row block R_i = v_i^T(P1+P1^T)O
    // + v_i^T P2, and the intermediate W_i kept for cross constants.
    std::vector<uint8_t> wall(static_cast<size_t>(k) * m * v, 0);
    for (int i = 0; i < k; ++i) {
      const uint8_t* vi = &vin[static_cast<size_t>(i) * v];
      uint8_t* wi = &wall[static_cast<size_t>(i) * m * v];
      uint8_t* ci = &consts[static_cast<size_t>(i) * m];
      size_t pair = 0;
      for (int x = 0; x < v; ++x) {
        for (int z = x; z < v; ++z, ++pair) {
          const uint8_t* p1v = &pub.p1[pair * static_cast<size_t>(m)];
          uint8_t prod = mul(vi[x], vi[z]);
          if (prod != 0) {
            for (int eq = 0; eq < m; ++eq)
              ci[eq] ^= mul(p1v[eq], prod);
          }
          if (x != z) {
            if (vi[x] != 0) {
              for (int eq = 0; eq < m; ++eq)
                wi[static_cast<size_t>(eq) * v + z] ^= mul(p1v[eq], vi[x]);
            }
            if (vi[z] != 0) {
              for (int eq = 0; eq < m; ++eq)
                wi[static_cast<size_t>(eq) * v + x] ^= mul(p1v[eq], vi[z]);
            }
          }
        }
      }
      uint8_t* ri = &rmat[static_cast<size_t>(i) * m * o];
      for (int eq = 0; eq < m; ++eq) {
        const uint8_t* wrow = &wi[static_cast<size_t>(eq) * v];
        uint8_t* rrow = &ri[static_cast<size_t>(eq) * o];
        for (int x = 0; x < v; ++x) {
          uint8_t c = wrow[x];
          if (c == 0)
            continue;
          const uint8_t* orow = &sec.oil[static_cast<size_t>(x) * o];
          for (int b = 0; b < o; ++b)
            rrow[b] ^= mul(c, orow[b]);
        }
      }
      for (int x = 0; x < v; ++x) {
        uint8_t vx = vi[x];
        if (vx == 0)
          continue;
        for (int b = 0; b < o; ++b) {
          const uint8_t* p2v = &pub.p2[(static_cast<size_t>(x) * o + b) * m];
          for (int eq = 0; eq < m; ++eq)
            ri[static_cast<size_t>(eq) * o + b] ^= mul(p2v[eq], vx);
        }
      }
      (void)w;
    }

    // Fold the whipped map: pair (i,j) with i<=j takes multiplier z^ell.
    int ell = 0;
    auto add_block = [&](const uint8_t* rblock, int oil_index, int power) {
      for (int b = 0; b < o; ++b) {
        for (int eq = 0; eq < m; ++eq)
          tmp[static_cast<size_t>(eq)] = rblock[static_cast<size_t>(eq) * o + b];
        apply_z_pow(tmp.data(), m, power);
        size_t col = static_cast<size_t>(oil_index) * o + b;
        for (int eq = 0; eq < m; ++eq)
          a[static_cast<size_t>(eq) * cols + col] ^= tmp[static_cast<size_t>(eq)];
      }
    };
    for (int i = 0; i < k; ++i) {
      for (int j = i; j < k; ++j, ++ell) {
        if (i == j) {
          std::copy_n(&consts[static_cast<size_t>(i) * m], m, tmp.data());
          apply_z_pow(tmp.data(), m, ell);
          for (int eq = 0; eq < m; ++eq)
            y[static_cast<size_t>(eq)] ^= tmp[static_cast<size_t>(eq)];
          add_block(&rmat[static_cast<size_t>(i) * m * o], i, ell);
        } else {
          // Cross constant: v_i^T (P1+P1^T) v_j via the stored W_i.
          const uint8_t* wi = &wall[static_cast<size_t>(i) * m * v];
          const uint8_t* vj = &vin[static_cast<size_t>(j) * v];
          std::fill(tmp.begin(), tmp.end(), 0);
          for (int eq = 0; eq < m; ++eq) {
            const uint8_t* wrow = &wi[static_cast<size_t>(eq) * v];
            uint8_t acc = 0;
            for (int x = 0; x < v; ++x)
              acc ^= mul(wrow[x], vj[x]);
            tmp[static_cast<size_t>(eq)] = acc;
          }
          apply_z_pow(tmp.data(), m, ell);
          for (int eq = 0; eq < m; ++eq)
            y[static_cast<size_t>(eq)] ^= tmp[static_cast<size_t>(eq)];
          add_block(&rmat[static_cast<size_t>(i) * m * o], j, ell);
          add_block(&rmat[static_cast<size_t>(j) * m * o], i, ell);
        }
      }
    }

    if (!gf16::solve(a, y, static_cast<size_t>(m), cols, sol))
      continue;

    // s_i = (v_i + O * oil_i, oil_i)
    std::vector<uint8_t> s(static_cast<size_t>(k) * p.n);
    for (int i = 0; i < k; ++i) {
      const uint8_t* oi = &sol[static_cast<size_t>(i) * o];
      uint8_t* si = &s[static_cast<size_t>(i) * p.n];
      const uint8_t* vi = &vin[static_cast<size_t>(i) * v];
      for (int x = 0; x < v; ++x) {
        uint8_t acc = vi[x];
        const uint8_t* orow = &sec.oil[static_cast<size_t>(x) * o];
        for (int b = 0; b < o; ++b)
          acc ^= mul(orow[b], oi[b]);
        si[x] = acc;
      }
      for (int b = 0; b < o; ++b)
        si[v + b] = oi[b];
    }

    Bytes sig(p.signature_bytes());
    gf16::pack_nibbles(s.data(), s.size(), sig.data());
    std::memcpy(sig.data() + (s.size() + 1) / 2, salt.data(), salt.size());
    return sig;
  }
  throw std::runtime_error("mayo: no solvable system after 256 attempts");
}

bool verify(const Params& p, ByteView public_key, ByteView message,
            ByteView signature)
{
  if (public_key.size() != p.public_key_bytes() ||
      signature.size() != p.signature_bytes())
    return false;

  const int v = p.v(), o = p.o, m = p.m, k = p.k, n = p.n;
  ExpandedPublic pub = expand_public(p, public_key.data());
  std::vector<uint8_t> p3(p3_pairs(p) * static_cast<size_t>(m));
  gf16::unpack_nibbles(public_key.data() + 16, p3.size(), p3.data());

  size_t s_nibbles = static_cast<size_t>(n) * k;
  std::vector<uint8_t> s(s_nibbles);
  gf16::unpack_nibbles(signature.data(), s_nibbles, s.data());
  ByteView salt = signature.subspan((s_nibbles + 1) / 2, p.salt_bytes);
  std::vector<uint8_t> target = message_target(p, message, salt);

  std::vector<uint8_t> y(static_cast<size_t>(m), 0);
  std::vector<uint8_t> u(static_cast<size_t>(m));

  int ell = 0;
  for (int i = 0; i < k; ++i) {
    const uint8_t* xi = &s[static_cast<size_t>(i) * n];
    for (int j = i; j < k; ++j, ++ell) {
      const uint8_t* xj = &s[static_cast<size_t>(j) * n];
      std::fill(u.begin(), u.end(), 0);
      if (i == j) {
        size_t pair = 0;
        for (int a = 0; a < v; ++a) {
          for (int b = a; b < v; ++b, ++pair) {
            uint8_t prod = mul(xi[a], xi[b]);
            if (prod == 0)
              continue;
            const uint8_t* p1v = &pub.p1[pair * static_cast<size_t>(m)];
            for (int eq = 0; eq < m; ++eq)
              u[static_cast<size_t>(eq)] ^= mul(p1v[eq], prod);
          }
        }
        for (int a = 0; a < v; ++a) {
          if (xi[a] == 0)
            continue;
          for (int b = 0; b < o; ++b) {
            uint8_t prod = mul(xi[a], xi[v + b]);
            if (prod == 0)
              continue;
            const uint8_t* p2v = &pub.p2[(static_cast<size_t>(a) * o + b) * m];
            for (int eq = 0; eq < m; ++eq)
              u[static_cast<size_t>(eq)] ^= mul(p2v[eq], prod);
          }
        }
        size_t p3pair = 0;
        for (int a = 0; a < o; ++a) {
          for (int b = a; b < o; ++b, ++p3pair) {
            uint8_t prod = mul(xi[v + a], xi[v + b]);
            if (prod == 0)
              continue;
            const uint8_t* p3v = &p3[p3pair * static_cast<size_t>(m)];
            for (int eq = 0; eq < m; ++eq)
              u[static_cast<size_t>(eq)] ^= mul(p3v[eq], prod);
          }
        }
      } else {
        // Polar form: diagonal monomials vanish in characteristic 2.
        size_t pair = 0;
        for (int a = 0; a < v; ++a) {
          for (int b = a; b < v; ++b, ++pair) {
            if (a == b)
              continue;
            uint8_t coeff =
              static_cast<uint8_t>(mul(xi[a], xj[b]) ^ mul(xi[b], xj[a]));
            if (coeff == 0)
              continue;
            const uint8_t* p1v = &pub.p1[pair * static_cast<size_t>(m)];
            for (int eq = 0; eq < m; ++eq)
              u[static_cast<size_t>(eq)] ^= mul(p1v[eq], coeff);
          }
        }
        for (int a = 0; a < v; ++a) {
          for (int b = 0; b < o; ++b) {
            uint8_t coeff =
              static_cast<uint8_t>(mul(xi[a], xj[v + b]) ^ mul(xj[a], xi[v + b]));
            if (coeff == 0)
              continue;
            const uint8_t* p2v = &pub.p2[(static_cast<size_t>(a) * o + b) * m];
            for (int eq = 0; eq < m; ++eq)
              u[static_cast<size_t>(eq)] ^= mul(p2v[eq], coeff);
          }
        }
        size_t p3pair = 0;
        for (int a = 0; a < o; ++a) {
          for (int b = a; b < o; ++b, ++p3pair) {
            if (a == b)
              continue;
            uint8_t coeff = static_cast<uint8_t>(mul(xi[v + a], xj[v + b]) ^
                                                 mul(xi[v + b], xj[v + a]));
            if (coeff == 0)
              continue;
            const uint8_t* p3v = &p3[p3pair * static_cast<size_t>(m)];
            for (int eq = 0; eq < m; ++eq)
              u[static_cast<size_t>(eq)] ^= mul(p3v[eq], coeff);
          }
        }
      }
      apply_z_pow(u.data(), m, ell);
      for (int eq = 0; eq < m; ++eq)
        y[static_cast<size_t>(eq)] ^= u[static_cast<size_t>(eq)];
    }
  }
  return y == target;
}

} // namespace pqdns::crypto::mayo
