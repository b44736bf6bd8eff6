// Copyright (c) 2026 The pqdns Authors. All rights reserved.
// Licensed under the Apache 2.0 License.
//
// Shared helpers for the test suites. The reference implementations in here
// are intentionally independent of the library code they check.

#pragma once

#include "pqdns/util.hpp"
#include "pqdns/wire.hpp"

#include <random>
#include <string>

namespace testutil {

using pqdns::Bytes;
using pqdns::ByteView;

// Independent RFC 4034 Appendix B key tag checksum, written directly from
// the RFC's procedure. Used as the oracle for keystore::key_tag.
inline uint16_t key_tag_oracle(ByteView rdata)
{
  uint32_t ac = 0;
  for (size_t i = 0; i < rdata.size(); ++i)
    ac += (i & 1) ? rdata[i] : static_cast<uint32_t>(rdata[i]) << 8;
  ac += (ac >> 16) & 0xffff;
  return static_cast<uint16_t>(ac & 0xffff);
}

inline Bytes random_bytes(std::mt19937& rng, size_t n)
{
  Bytes out(n);
  std::uniform_int_distribution<int> d(0, 255);
  for (auto& b : out)
    b = static_cast<uint8_t>(d(rng));
  return out;
}

inline pqdns::wire::DomainName random_name(std::mt19937& rng)
{
  std::uniform_int_distribution<int> nlabels(0, 4);
  std::uniform_int_distribution<int> llen(1, 12);
  std::uniform_int_distribution<int> ch(0, 35);
  std::vector<Bytes> labels;
  int n = nlabels(rng);
  for (int i = 0; i < n; ++i) {
    Bytes label(static_cast<size_t>(llen(rng)));
    for (auto& b : label) {
      int v = ch(rng);
      b = static_cast<uint8_t>(v < 26 ? (rng() % 2 ? 'a' + v : 'A' + v) : '0' + v - 26);
    }
    labels.push_back(std::move(label));
  }
  return pqdns::wire::DomainName::from_labels(std::move(labels));
}

inline pqdns::wire::ResourceRecord random_rr(std::mt19937& rng)
{
  std::uniform_int_distribution<int> type(1, 60);
  std::uniform_int_distribution<int> rdlen(0, 64);
  pqdns::wire::ResourceRecord rr;
  rr.name = random_name(rng);
  rr.rrtype = static_cast<uint16_t>(type(rng));
  if (rr.rrtype == pqdns::wire::TYPE_OPT)
    rr.rrtype = 1;
  rr.rrclass = pqdns::wire::CLASS_IN;
  rr.ttl = rng() % 100000;
  rr.rdata = random_bytes(rng, static_cast<size_t>(rdlen(rng)));
  return rr;
}

inline pqdns::wire::DnsMessage random_message(std::mt19937& rng)
{
  pqdns::wire::DnsMessage msg;
  msg.id = static_cast<uint16_t>(rng());
  msg.flags.qr = rng() % 2;
  msg.flags.aa = rng() % 2;
  msg.flags.tc = rng() % 2;
  msg.flags.rd = rng() % 2;
  msg.flags.ra = rng() % 2;
  msg.flags.rcode = rng() % 16;
  msg.flags.opcode = rng() % 3;
  if (rng() % 4 != 0) {
    pqdns::wire::Question q;
    q.name = random_name(rng);
    q.rrtype = 1 + rng() % 50;
    msg.question = q;
  }
  auto fill = [&](std::vector<pqdns::wire::ResourceRecord>& v, int maxn) {
    int n = static_cast<int>(rng() % (maxn + 1));
    for (int i = 0; i < n; ++i)
      v.push_back(random_rr(rng));
  };
  fill(msg.answers, 3);
  fill(msg.authority, 2);
  fill(msg.additional, 2);
  if (rng() % 2) {
    pqdns::wire::EdnsInfo e;
    e.udp_payload_size = 512 + rng() % 4000;
    e.do_bit = rng() % 2;
    msg.edns = e;
  }
  return msg;
}

} // namespace testutil
