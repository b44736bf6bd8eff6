// Copyright (c) 2026 The pqdns Authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pqdns {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

inline Bytes to_bytes(std::string_view s)
{
  return Bytes(s.begin(), s.end());
}

inline std::string to_string_copy(ByteView b)
{
  return std::string(b.begin(), b.end());
}

inline char ascii_lower(char c)
{
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c;
}

std::string hex_encode(ByteView data);
Bytes hex_decode(std::string_view hex); // throws std::runtime_error on bad input

// Standard-alphabet base64 with padding, no line wrapping.
std::string base64_encode(ByteView data);
Bytes base64_decode(std::string_view text); // throws std::runtime_error on bad input

} // namespace pqdns
