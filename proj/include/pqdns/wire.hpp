// Copyright (c) 2026 The pqdns Authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include "pqdns/util.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pqdns::wire {

struct WireError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Record type codes used by this project. Unknown types still round-trip as
// opaque rdata.
enum RrType : uint16_t {
  TYPE_A = 1,
  TYPE_TXT = 16,
  TYPE_AAAA = 28,
  TYPE_OPT = 41,
  TYPE_DNSKEY = 48,
  TYPE_RRSIG = 46,
};

enum RrClass : uint16_t {
  CLASS_IN = 1,
};

enum Rcode : uint8_t {
  RCODE_NOERROR = 0,
  RCODE_FORMERR = 1,
  RCODE_SERVFAIL = 2,
  RCODE_NXDOMAIN = 3,
  RCODE_NOTIMP = 4,
  RCODE_REFUSED = 5,
};

constexpr size_t MAX_LABEL_LEN = 63;
constexpr size_t MAX_NAME_WIRE_LEN = 255;
constexpr size_t MAX_MESSAGE_LEN = 65535; // TCP framing limit
constexpr uint16_t DEFAULT_EDNS_PAYLOAD = 1232;

// A domain name as an ordered list of labels. Original octet case is
// preserved; comparisons are case-insensitive per RFC 1035.
class DomainName {
public:
  DomainName() = default; // the root name "."

  // Parses presentation format ("mysig.com." or "mysig.com"). ASCII only,
  // no escape sequences.
  static DomainName parse(std::string_view text);
  static DomainName from_labels(std::vector<Bytes> labels);

  const std::vector<Bytes>& labels() const { return labels_; }
  bool is_root() const { return labels_.empty(); }
  uint8_t label_count() const { return static_cast<uint8_t>(labels_.size()); }
  size_t wire_length() const;

  Bytes to_wire() const;        // uncompressed, original case
  Bytes canonical_wire() const; // uncompressed, A-Z lowered
  std::string to_string() const;

  // True when this name equals `apex` or lies below it.
  bool is_subdomain_of(const DomainName& apex) const;

  bool operator==(const DomainName& other) const;

private:
  std::vector<Bytes> labels_;
};

struct Question {
  DomainName name;
  uint16_t rrtype = 0;
  uint16_t rrclass = CLASS_IN;

  bool operator==(const Question&) const = default;
};

struct ResourceRecord {
  DomainName name;
  uint16_t rrtype = 0;
  uint16_t rrclass = CLASS_IN;
  uint32_t ttl = 0;
  Bytes rdata;

  bool operator==(const ResourceRecord&) const = default;
};

// All records sharing owner name, type and class. TTL is normalized to the
// minimum of the members; duplicate rdatas are rejected.
struct Rrset {
  DomainName name;
  uint16_t rrtype = 0;
  uint16_t rrclass = CLASS_IN;
  uint32_t ttl = 0;
  std::vector<Bytes> rdatas;

  Rrset() = default;
  Rrset(DomainName name, uint16_t rrtype, uint16_t rrclass, uint32_t ttl,
        std::vector<Bytes> rdatas);
  static Rrset from_records(const std::vector<ResourceRecord>& records);

  std::vector<ResourceRecord> to_records() const;
};

struct HeaderFlags {
  bool qr = false;
  uint8_t opcode = 0;
  bool aa = false;
  bool tc = false;
  bool rd = false;
  bool ra = false;
  bool ad = false;
  bool cd = false;
  uint8_t rcode = RCODE_NOERROR;

  bool operator==(const HeaderFlags&) const = default;
};

struct EdnsInfo {
  uint16_t udp_payload_size = DEFAULT_EDNS_PAYLOAD;
  bool do_bit = false;

  bool operator==(const EdnsInfo&) const = default;
};

struct DnsMessage {
  uint16_t id = 0;
  HeaderFlags flags;
  std::optional<Question> question;
  std::vector<ResourceRecord> answers;
  std::vector<ResourceRecord> authority;
  std::vector<ResourceRecord> additional; // without the OPT pseudo-record
  std::optional<EdnsInfo> edns;

  bool operator==(const DnsMessage&) const = default;
};

// Decodes one complete message. Compression pointers in names are resolved;
// an OPT pseudo-record in the additional section is lifted into `edns`.
DnsMessage decode_message(ByteView input);

// Deterministic encoding without name compression. Throws WireError when the
// result would exceed 65,535 bytes.
Bytes encode_message(const DnsMessage& msg);

// RFC 4034 section 6 canonical forms.
Bytes canonical_name(const DomainName& name);
Bytes canonical_rrset(const Rrset& rrset);

// 2-byte big-endian length prefix used on TCP.
Bytes frame_tcp(ByteView msg);

std::string rrtype_to_string(uint16_t rrtype);
uint16_t rrtype_from_string(std::string_view text); // throws on unknown

} // namespace pqdns::wire
