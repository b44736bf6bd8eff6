// Copyright (c) 2026 The pqdns Authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pqdns/wire.hpp"
#include "testutil.hpp"

#include <algorithm>
#include <random>

using namespace pqdns;
using namespace pqdns::wire;

TEST_CASE("minimal 12-byte header decodes to empty message")
{
  Bytes input(12, 0);
  input[0] = 0xab;
  input[1] = 0xcd;
  DnsMessage msg = decode_message(input);
  CHECK(msg.id == 0xabcd);
  CHECK(!msg.question);
  CHECK(msg.answers.empty());
  CHECK(msg.authority.empty());
  CHECK(msg.additional.empty());
  CHECK(!msg.edns);
  CHECK(encode_message(msg) == input);
}

TEST_CASE("hand-assembled query for mysig.com A with EDNS decodes field by field")
{
  // Reference bytes assembled manually from RFC 1035/6891 field layouts.
  Bytes input = {
    0x12, 0x34,             // id
    0x01, 0x20,             // flags: RD=1, AD=1
    0x00, 0x01,             // qdcount
    0x00, 0x00,             // ancount
    0x00, 0x00,             // nscount
    0x00, 0x01,             // arcount
    5, 'm', 'y', 's', 'i', 'g', 3, 'c', 'o', 'm', 0,
    0x00, 0x01,             // qtype A
    0x00, 0x01,             // qclass IN
    0,                      // OPT owner: root
    0x00, 0x29,             // type 41 (OPT)
    0x04, 0xd0,             // class = 1232 (requestor payload size)
    0x00, 0x00, 0x80, 0x00, // ttl: DO bit set
    0x00, 0x00,             // rdlen 0
  };
  DnsMessage msg = decode_message(input);
  CHECK(msg.id == 0x1234);
  CHECK(msg.flags.rd);
  CHECK(msg.flags.ad);
  CHECK(!msg.flags.qr);
  REQUIRE(msg.question);
  CHECK(msg.question->name.to_string() == "mysig.com.");
  CHECK(msg.question->rrtype == TYPE_A);
  CHECK(msg.question->rrclass == CLASS_IN);
  REQUIRE(msg.edns);
  CHECK(msg.edns->udp_payload_size == 1232);
  CHECK(msg.edns->do_bit);
  CHECK(msg.additional.empty());
  CHECK(encode_message(msg) == input);
}

TEST_CASE("encoded sizes follow field widths")
{
  DnsMessage msg;
  msg.id = 7;
  msg.flags.qr = true;
  Question q;
  q.name = DomainName::parse("mysig.com.");
  q.rrtype = TYPE_A;
  msg.question = q;

  // mysig.com. wire form: 1+5 + 1+3 + 1 = 11 octets, question adds 4.
  CHECK(encode_message(msg).size() == 12 + 11 + 4);

  ResourceRecord a;
  a.name = DomainName::parse("mysig.com.");
  a.rrtype = TYPE_A;
  a.ttl = 3600;
  a.rdata = {10, 0, 0, 1};
  msg.answers.push_back(a);
  // Uncompressed A record: 11 (name) + 10 (fixed fields) + 4 (rdata) = 25.
  CHECK(encode_message(msg).size() == 12 + 15 + 25);
}

TEST_CASE("messages over 65,535 octets are rejected")
{
  DnsMessage msg;
  ResourceRecord rr;
  rr.name = DomainName::parse("big.example.");
  rr.rrtype = TYPE_TXT;
  rr.rdata.assign(60000, 0x41);
  msg.answers.push_back(rr);
  msg.answers.push_back(rr);
  CHECK_THROWS_AS(encode_message(msg), WireError);
}

TEST_CASE("compression pointers are resolved on decode")
{
  Bytes input = {
    0x00, 0x01, 0x80, 0x00,
    0x00, 0x01, 0x00, 0x01, 0x00, 0x00, 0x00, 0x00,
    5, 'm', 'y', 's', 'i', 'g', 3, 'c', 'o', 'm', 0,
    0x00, 0x01, 0x00, 0x01,
    // answer owner: pointer to offset 12
    0xc0, 0x0c,
    0x00, 0x01, 0x00, 0x01,
    0x00, 0x00, 0x0e, 0x10,
    0x00, 0x04, 10, 0, 0, 1,
  };
  DnsMessage msg = decode_message(input);
  REQUIRE(msg.answers.size() == 1);
  CHECK(msg.answers[0].name.to_string() == "mysig.com.");
  CHECK(msg.answers[0].rdata == Bytes{10, 0, 0, 1});
  // Re-encoding expands the pointer, so the message grows by 9 octets.
  CHECK(encode_message(msg).size() == input.size() + 9);
}

TEST_CASE("decode errors")
{
  SUBCASE("truncated header")
  {
    Bytes input(7, 0);
    CHECK_THROWS_AS(decode_message(input), WireError);
  }
  SUBCASE("empty input")
  {
    CHECK_THROWS_AS(decode_message(Bytes{}), WireError);
  }
  SUBCASE("pointer loop")
  {
    Bytes input = {0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0,
                   0xc0, 0x0c, 0, 1, 0, 1};
    CHECK_THROWS_AS(decode_message(input), WireError);
  }
  SUBCASE("label too long")
  {
    Bytes input(12, 0);
    input[5] = 1; // qdcount
    input.push_back(64); // label length 64
    input.resize(input.size() + 64 + 5, 'a');
    CHECK_THROWS_AS(decode_message(input), WireError);
  }
  SUBCASE("name too long")
  {
    Bytes input(12, 0);
    input[5] = 1;
    for (int i = 0; i < 5; ++i) {
      input.push_back(63);
      input.resize(input.size() + 63, 'a');
    }
    input.push_back(0);
    input.insert(input.end(), {0, 1, 0, 1});
    CHECK_THROWS_AS(decode_message(input), WireError);
  }
  SUBCASE("question count above one")
  {
    Bytes input(12, 0);
    input[5] = 2;
    CHECK_THROWS_AS(decode_message(input), WireError);
  }
}

TEST_CASE("canonical_name")
{
  CHECK(canonical_name(DomainName::parse("WWW.MySig.COM.")) ==
        DomainName::parse("www.mysig.com.").to_wire());
  CHECK(canonical_name(DomainName()) == Bytes{0});
  // Only A-Z map; other octets pass through unchanged.
  DomainName hyphen = DomainName::parse("a-B.example.");
  Bytes canon = canonical_name(hyphen);
  CHECK(canon == DomainName::parse("a-b.example.").to_wire());
  CHECK(canon[2] == 0x2d);
}

TEST_CASE("canonical_name is idempotent")
{
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    DomainName n = testutil::random_name(rng);
    Bytes once = canonical_name(n);
    // Parse the canonical wire form back into labels and canonicalize again.
    std::vector<Bytes> labels;
    size_t pos = 0;
    while (once[pos] != 0) {
      labels.emplace_back(once.begin() + pos + 1, once.begin() + pos + 1 + once[pos]);
      pos += 1 + once[pos];
    }
    CHECK(canonical_name(DomainName::from_labels(labels)) == once);
  }
}

TEST_CASE("canonical_rrset")
{
  SUBCASE("single A record structure")
  {
    Rrset rrset(DomainName::parse("mysig.com."), TYPE_A, CLASS_IN, 3600,
                {{10, 0, 0, 1}});
    Bytes out = canonical_rrset(rrset);
    CHECK(out.size() == 11 + 10 + 4);
  }
  SUBCASE("rdatas sort bytewise ascending")
  {
    Rrset rrset(DomainName::parse("mysig.com."), TYPE_A, CLASS_IN, 3600,
                {{10, 0, 0, 2}, {10, 0, 0, 1}});
    Bytes out = canonical_rrset(rrset);
    // First tuple's rdata starts after name(11) + fixed(10).
    CHECK(out[11 + 10 + 3] == 1);
    CHECK(out[2 * (11 + 10 + 4) - 1] == 2);
  }
  SUBCASE("duplicate rdatas rejected at construction")
  {
    CHECK_THROWS_AS(Rrset(DomainName::parse("mysig.com."), TYPE_A, CLASS_IN,
                          3600, {{10, 0, 0, 1}, {10, 0, 0, 1}}),
                    WireError);
  }
  SUBCASE("empty RRset rejected")
  {
    Rrset rrset(DomainName::parse("mysig.com."), TYPE_A, CLASS_IN, 3600, {});
    CHECK_THROWS_AS(canonical_rrset(rrset), WireError);
  }
  SUBCASE("owner case does not affect output")
  {
    Rrset a(DomainName::parse("MySig.COM."), TYPE_A, CLASS_IN, 60, {{1, 2, 3, 4}});
    Rrset b(DomainName::parse("mysig.com."), TYPE_A, CLASS_IN, 60, {{1, 2, 3, 4}});
    CHECK(canonical_rrset(a) == canonical_rrset(b));
  }
}

TEST_CASE("canonical ordering is permutation-invariant and idempotent")
{
  std::mt19937 rng(22);
  for (int i = 0; i < 100; ++i) {
    std::vector<Bytes> rdatas;
    int n = 1 + static_cast<int>(rng() % 5);
    for (int j = 0; j < n; ++j) {
      Bytes r = testutil::random_bytes(rng, 1 + rng() % 8);
      if (std::find(rdatas.begin(), rdatas.end(), r) == rdatas.end())
        rdatas.push_back(r);
    }
    Rrset rrset(DomainName::parse("x.example."), TYPE_TXT, CLASS_IN, 30, rdatas);
    Bytes first = canonical_rrset(rrset);

    std::shuffle(rdatas.begin(), rdatas.end(), rng);
    Rrset shuffled(DomainName::parse("X.Example."), TYPE_TXT, CLASS_IN, 30, rdatas);
    CHECK(canonical_rrset(shuffled) == first);
  }
}

TEST_CASE("round trip: encode then decode then encode is identity")
{
  std::mt19937 rng(33);
  for (int i = 0; i < 500; ++i) {
    DnsMessage msg = testutil::random_message(rng);
    Bytes encoded;
    try {
      encoded = encode_message(msg);
    } catch (const WireError&) {
      continue; // oversized random message
    }
    DnsMessage decoded = decode_message(encoded);
    CHECK(encode_message(decoded) == encoded);
  }
}

TEST_CASE("fuzzed decoder terminates with error or message, never overreads")
{
  std::mt19937 rng(44);
  int decoded_ok = 0;
  for (int i = 0; i < 4000; ++i) {
    Bytes input;
    if (i % 2 == 0) {
      input = testutil::random_bytes(rng, rng() % 300);
    } else {
      // Mutated valid encodings exercise deeper paths.
      input = encode_message(testutil::random_message(rng));
      for (int m = 0; m < 4; ++m)
        input[rng() % input.size()] = static_cast<uint8_t>(rng());
      if (rng() % 2)
        input.resize(rng() % (input.size() + 1));
    }
    try {
      decode_message(input);
      ++decoded_ok;
    } catch (const WireError&) {
    }
  }
  CHECK(decoded_ok >= 0);
}

TEST_CASE("rrset construction from records")
{
  ResourceRecord r1{DomainName::parse("a.example."), TYPE_A, CLASS_IN, 300, {1, 1, 1, 1}};
  ResourceRecord r2{DomainName::parse("A.example."), TYPE_A, CLASS_IN, 200, {2, 2, 2, 2}};
  Rrset rrset = Rrset::from_records({r1, r2});
  CHECK(rrset.ttl == 200); // normalized to minimum
  CHECK(rrset.rdatas.size() == 2);

  ResourceRecord other{DomainName::parse("b.example."), TYPE_A, CLASS_IN, 300, {1, 1, 1, 1}};
  CHECK_THROWS_AS(Rrset::from_records({r1, other}), WireError);
}

TEST_CASE("tcp framing")
{
  Bytes msg = {1, 2, 3};
  Bytes framed = frame_tcp(msg);
  CHECK(framed == Bytes{0, 3, 1, 2, 3});
}

TEST_CASE("domain name helpers")
{
  DomainName apex = DomainName::parse("mysig.com.");
  CHECK(DomainName::parse("www.mysig.com.").is_subdomain_of(apex));
  CHECK(DomainName::parse("MYSIG.COM.").is_subdomain_of(apex));
  CHECK(!DomainName::parse("notmysig.com.").is_subdomain_of(apex));
  CHECK(!DomainName::parse("com.").is_subdomain_of(apex));
  CHECK(DomainName::parse("anything.example.").is_subdomain_of(DomainName()));
  CHECK(DomainName::parse("mysig.com") == apex);
  CHECK_THROWS_AS(DomainName::parse("bad..name."), WireError);
  CHECK_THROWS_AS(DomainName::parse(""), WireError);
}
