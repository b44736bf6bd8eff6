// Copyright (c) 2026 The pqdns Authors. All rights reserved.
// Licensed under the Apache 2.0 License.
//
// GF(16) arithmetic (F2[x]/(x^4+x+1)) shared by the multivariate schemes.

#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace pqdns::crypto::gf16 {

constexpr std::array<std::array<uint8_t, 16>, 16> make_mul_table()
{
  std::array<std::array<uint8_t, 16>, 16> t{};
  for (int a = 0; a < 16; ++a) {
    for (int b = 0; b < 16; ++b) {
      int r = 0;
      for (int i = 0; i < 4; ++i) {
        if (b & (1 << i))
          r ^= a << i;
      }
      for (int bit = 7; bit >= 4; --bit) {
        if (r & (1 << bit))
          r ^= 0b10011 << (bit - 4);
      }
      t[static_cast<size_t>(a)][static_cast<size_t>(b)] = static_cast<uint8_t>(r);
    }
  }
  return t;
}

inline constexpr auto MUL = make_mul_table();

constexpr std::array<uint8_t, 16> make_inv_table()
{
  std::array<uint8_t, 16> inv{};
  auto mul = make_mul_table();
  for (int a = 1; a < 16; ++a) {
    for (int b = 1; b < 16; ++b) {
      if (mul[static_cast<size_t>(a)][static_cast<size_t>(b)] == 1)
        inv[static_cast<size_t>(a)] = static_cast<uint8_t>(b);
    }
  }
  return inv;
}

inline constexpr auto INV = make_inv_table();

inline uint8_t mul(uint8_t a, uint8_t b)
{
  return MUL[a][b];
}

inline uint8_t inv(uint8_t a)
{
  return INV[a];
}

// Nibble stream over a byte buffer, low nibble first.
class NibbleReader {
public:
  explicit NibbleReader(const uint8_t* data) : data_(data) {}

  uint8_t next()
  {
    uint8_t b = data_[pos_ >> 1];
    uint8_t v = (pos_ & 1) ? (b >> 4) : (b & 0x0f);
    ++pos_;
    return v;
  }

private:
  const uint8_t* data_;
  size_t pos_ = 0;
};

inline void pack_nibbles(const uint8_t* vals, size_t count, uint8_t* out)
{
  for (size_t i = 0; i < count; i += 2) {
    uint8_t lo = vals[i] & 0x0f;
    uint8_t hi = (i + 1 < count) ? (vals[i + 1] & 0x0f) : 0;
    out[i / 2] = static_cast<uint8_t>(hi << 4 | lo);
  }
}

inline void unpack_nibbles(const uint8_t* data, size_t count, uint8_t* out)
{
  for (size_t i = 0; i < count; ++i) {
    uint8_t b = data[i / 2];
    out[i] = (i & 1) ? (b >> 4) : (b & 0x0f);
  }
}

// Solves M * x = y over GF(16) by Gaussian elimination. M is rows x cols in
// row-major order and is destroyed. Free variables are set to zero. Returns
// false when the system is inconsistent.
inline bool solve(std::vector<uint8_t>& m, std::vector<uint8_t>& y,
                  size_t rows, size_t cols, std::vector<uint8_t>& x)
{
  std::vector<size_t> pivot_col(rows, SIZE_MAX);
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = SIZE_MAX;
    for (size_t r = rank; r < rows; ++r) {
      if (m[r * cols + col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == SIZE_MAX)
      continue;
    if (pivot != rank) {
      for (size_t c = col; c < cols; ++c)
        std::swap(m[pivot * cols + c], m[rank * cols + c]);
      std::swap(y[pivot], y[rank]);
    }
    uint8_t scale = inv(m[rank * cols + col]);
    for (size_t c = col; c < cols; ++c)
      m[rank * cols + c] = mul(m[rank * cols + c], scale);
    y[rank] = mul(y[rank], scale);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank)
        continue;
      uint8_t f = m[r * cols + col];
      if (f == 0)
        continue;
      for (size_t c = col; c < cols; ++c)
        m[r * cols + c] ^= mul(f, m[rank * cols + c]);
      y[r] ^= mul(f, y[rank]);
    }
    pivot_col[rank] = col;
    ++rank;
  }
  for (size_t r = rank; r < rows; ++r) {
    if (y[r] != 0)
      return false;
  }
  x.assign(cols, 0);
  for (size_t r = 0; r < rank; ++r)
    x[pivot_col[r]] = y[r];
  return true;
}

} // namespace pqdns::crypto::gf16
