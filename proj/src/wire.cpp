// Copyright (c) 2026 The pqdns Authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "pqdns/wire.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pqdns::wire {

namespace {

void append_u16(Bytes& out, uint16_t v)
{
  out.push_back(static_cast<uint8_t>(v >> 8));
  out.push_back(static_cast<uint8_t>(v & 0xff));
}

void append_u32(Bytes& out, uint32_t v)
{
  out.push_back(static_cast<uint8_t>(v >> 24));
  out.push_back(static_cast<uint8_t>(v >> 16));
  out.push_back(static_cast<uint8_t>(v >> 8));
  out.push_back(static_cast<uint8_t>(v & 0xff));
}

// Bounds-checked reader; every access validates against the input size, so
// the decoder cannot read past the buffer for any input.
class Reader {
public:
  explicit Reader(ByteView data) : data_(data) {}

  size_t offset() const { return offset_; }
  size_t remaining() const { return data_.size() - offset_; }

  uint8_t u8()
  {
    need(1);
    return data_[offset_++];
  }

  uint16_t u16()
  {
    need(2);
    uint16_t v = static_cast<uint16_t>(data_[offset_] << 8 | data_[offset_ + 1]);
    offset_ += 2;
    return v;
  }

  uint32_t u32()
  {
    need(4);
    uint32_t v = (static_cast<uint32_t>(data_[offset_]) << 24) |
      (static_cast<uint32_t>(data_[offset_ + 1]) << 16) |
      (static_cast<uint32_t>(data_[offset_ + 2]) << 8) |
      static_cast<uint32_t>(data_[offset_ + 3]);
    offset_ += 4;
    return v;
  }

  Bytes take(size_t n)
  {
    need(n);
    Bytes out(data_.begin() + static_cast<ptrdiff_t>(offset_),
              data_.begin() + static_cast<ptrdiff_t>(offset_ + n));
    offset_ += n;
    return out;
  }

  // Reads a possibly compressed name starting at the current offset.
  DomainName name()
  {
    std::vector<Bytes> labels;
    size_t wire_len = 1; // terminating zero octet
    size_t pos = offset_;
    bool jumped = false;
    size_t jumps = 0;

    while (true) {
      if (pos >= data_.size())
        throw WireError("truncated name");
      uint8_t len = data_[pos];
      if ((len & 0xc0) == 0xc0) {
        if (pos + 1 >= data_.size())
          throw WireError("truncated compression pointer");
        size_t target = (static_cast<size_t>(len & 0x3f) << 8) | data_[pos + 1];
        if (!jumped)
          offset_ = pos + 2;
        // Pointers must reference earlier data; combined with a hop limit
        // this rules out loops.
        if (target >= pos)
          throw WireError("forward compression pointer");
        if (++jumps > 127)
          throw WireError("compression pointer loop");
        pos = target;
        jumped = true;
        continue;
      }
      if ((len & 0xc0) != 0)
        throw WireError("reserved label type");
      if (len == 0) {
        if (!jumped)
          offset_ = pos + 1;
        break;
      }
      if (len > MAX_LABEL_LEN)
        throw WireError("label exceeds 63 octets");
      if (pos + 1 + len > data_.size())
        throw WireError("truncated label");
      wire_len += 1 + len;
      if (wire_len > MAX_NAME_WIRE_LEN)
        throw WireError("name exceeds 255 octets");
      labels.emplace_back(data_.begin() + static_cast<ptrdiff_t>(pos + 1),
                          data_.begin() + static_cast<ptrdiff_t>(pos + 1 + len));
      pos += 1 + len;
    }
    return DomainName::from_labels(std::move(labels));
  }

private:
  void need(size_t n) const
  {
    if (offset_ + n > data_.size())
      throw WireError("truncated message");
  }

  ByteView data_;
  size_t offset_ = 0;
};

} // namespace

DomainName DomainName::parse(std::string_view text)
{
  if (text.empty())
    throw WireError("empty name");
  if (text == ".")
    return DomainName();
  if (text.back() == '.')
    text.remove_suffix(1);

  std::vector<Bytes> labels;
  size_t start = 0;
  while (start <= text.size()) {
    size_t dot = text.find('.', start);
    std::string_view label =
      text.substr(start, dot == std::string_view::npos ? dot : dot - start);
    if (label.empty())
      throw WireError("empty label in name");
    if (label.size() > MAX_LABEL_LEN)
      throw WireError("label exceeds 63 octets");
    for (char c : label) {
      if (static_cast<unsigned char>(c) <= 0x20 ||
          static_cast<unsigned char>(c) >= 0x7f)
        throw WireError("name contains non-ASCII or control octet");
    }
    labels.emplace_back(label.begin(), label.end());
    if (dot == std::string_view::npos)
      break;
    start = dot + 1;
  }
  return from_labels(std::move(labels));
}

DomainName DomainName::from_labels(std::vector<Bytes> labels)
{
  size_t wire_len = 1;
  for (const Bytes& l : labels) {
    if (l.empty() || l.size() > MAX_LABEL_LEN)
      throw WireError("bad label length");
    wire_len += 1 + l.size();
  }
  if (wire_len > MAX_NAME_WIRE_LEN)
    throw WireError("name exceeds 255 octets");
  DomainName n;
  n.labels_ = std::move(labels);
  return n;
}

size_t DomainName::wire_length() const
{
  size_t len = 1;
  for (const Bytes& l : labels_)
    len += 1 + l.size();
  return len;
}

Bytes DomainName::to_wire() const
{
  Bytes out;
  out.reserve(wire_length());
  for (const Bytes& l : labels_) {
    out.push_back(static_cast<uint8_t>(l.size()));
    out.insert(out.end(), l.begin(), l.end());
  }
  out.push_back(0);
  return out;
}

Bytes DomainName::canonical_wire() const
{
  Bytes out = to_wire();
  for (uint8_t& b : out) {
    if (b >= 'A' && b <= 'Z')
      b += 32;
  }
  // Label length octets are 1..63 and never collide with 'A'..'Z' (0x41+),
  // so lowering the whole buffer is safe.
  return out;
}

std::string DomainName::to_string() const
{
  if (labels_.empty())
    return ".";
  std::string out;
  for (const Bytes& l : labels_) {
    out.append(l.begin(), l.end());
    out.push_back('.');
  }
  return out;
}

bool DomainName::is_subdomain_of(const DomainName& apex) const
{
  if (apex.labels_.size() > labels_.size())
    return false;
  auto mine = labels_.rbegin();
  for (auto it = apex.labels_.rbegin(); it != apex.labels_.rend(); ++it, ++mine) {
    if (mine->size() != it->size())
      return false;
    for (size_t i = 0; i < it->size(); ++i) {
      if (ascii_lower(static_cast<char>((*mine)[i])) !=
          ascii_lower(static_cast<char>((*it)[i])))
        return false;
    }
  }
  return true;
}

bool DomainName::operator==(const DomainName& other) const
{
  return labels_.size() == other.labels_.size() && is_subdomain_of(other);
}

Rrset::Rrset(DomainName name_, uint16_t rrtype_, uint16_t rrclass_,
             uint32_t ttl_, std::vector<Bytes> rdatas_)
  : name(std::move(name_)), rrtype(rrtype_), rrclass(rrclass_), ttl(ttl_),
    rdatas(std::move(rdatas_))
{
  std::set<Bytes> seen;
  for (const Bytes& r : rdatas) {
    if (r.size() > 0xffff)
      throw WireError("rdata exceeds 65,535 octets");
    if (!seen.insert(r).second)
      throw WireError("duplicate rdata in RRset");
  }
}

Rrset Rrset::from_records(const std::vector<ResourceRecord>& records)
{
  if (records.empty())
    throw WireError("empty RRset");
  const ResourceRecord& first = records.front();
  uint32_t ttl = first.ttl;
  std::vector<Bytes> rdatas;
  for (const ResourceRecord& rr : records) {
    if (!(rr.name == first.name) || rr.rrtype != first.rrtype ||
        rr.rrclass != first.rrclass)
      throw WireError("mixed records in RRset");
    ttl = std::min(ttl, rr.ttl);
    rdatas.push_back(rr.rdata);
  }
  return Rrset(first.name, first.rrtype, first.rrclass, ttl, std::move(rdatas));
}

std::vector<ResourceRecord> Rrset::to_records() const
{
  std::vector<ResourceRecord> out;
  out.reserve(rdatas.size());
  for (const Bytes& r : rdatas)
    out.push_back(ResourceRecord{name, rrtype, rrclass, ttl, r});
  return out;
}

namespace {

uint16_t flags_to_u16(const HeaderFlags& f)
{
  uint16_t v = 0;
  v |= static_cast<uint16_t>(f.qr) << 15;
  v |= static_cast<uint16_t>(f.opcode & 0x0f) << 11;
  v |= static_cast<uint16_t>(f.aa) << 10;
  v |= static_cast<uint16_t>(f.tc) << 9;
  v |= static_cast<uint16_t>(f.rd) << 8;
  v |= static_cast<uint16_t>(f.ra) << 7;
  v |= static_cast<uint16_t>(f.ad) << 5;
  v |= static_cast<uint16_t>(f.cd) << 4;
  v |= f.rcode & 0x0f;
  return v;
}

HeaderFlags flags_from_u16(uint16_t v)
{
  HeaderFlags f;
  f.qr = v & 0x8000;
  f.opcode = (v >> 11) & 0x0f;
  f.aa = v & 0x0400;
  f.tc = v & 0x0200;
  f.rd = v & 0x0100;
  f.ra = v & 0x0080;
  f.ad = v & 0x0020;
  f.cd = v & 0x0010;
  f.rcode = v & 0x000f;
  return f;
}

ResourceRecord decode_rr(Reader& r)
{
  ResourceRecord rr;
  rr.name = r.name();
  rr.rrtype = r.u16();
  rr.rrclass = r.u16();
  rr.ttl = r.u32();
  uint16_t rdlen = r.u16();
  rr.rdata = r.take(rdlen);
  return rr;
}

void encode_rr(Bytes& out, const ResourceRecord& rr)
{
  Bytes name = rr.name.to_wire();
  out.insert(out.end(), name.begin(), name.end());
  append_u16(out, rr.rrtype);
  append_u16(out, rr.rrclass);
  append_u32(out, rr.ttl);
  if (rr.rdata.size() > 0xffff)
    throw WireError("rdata exceeds 65,535 octets");
  append_u16(out, static_cast<uint16_t>(rr.rdata.size()));
  out.insert(out.end(), rr.rdata.begin(), rr.rdata.end());
}

} // namespace

DnsMessage decode_message(ByteView input)
{
  if (input.empty())
    throw WireError("empty input");
  Reader r(input);
  DnsMessage msg;
  msg.id = r.u16();
  msg.flags = flags_from_u16(r.u16());
  uint16_t qdcount = r.u16();
  uint16_t ancount = r.u16();
  uint16_t nscount = r.u16();
  uint16_t arcount = r.u16();

  if (qdcount > 1)
    throw WireError("multiple questions unsupported");
  if (qdcount == 1) {
    Question q;
    q.name = r.name();
    q.rrtype = r.u16();
    q.rrclass = r.u16();
    msg.question = std::move(q);
  }
  for (uint16_t i = 0; i < ancount; ++i)
    msg.answers.push_back(decode_rr(r));
  for (uint16_t i = 0; i < nscount; ++i)
    msg.authority.push_back(decode_rr(r));
  for (uint16_t i = 0; i < arcount; ++i) {
    ResourceRecord rr = decode_rr(r);
    if (rr.rrtype == TYPE_OPT) {
      if (msg.edns)
        throw WireError("multiple OPT records");
      if (!rr.name.is_root())
        throw WireError("OPT record with non-root owner");
      EdnsInfo e;
      e.udp_payload_size = rr.rrclass;
      e.do_bit = (rr.ttl & 0x8000) != 0;
      msg.edns = e;
    } else {
      msg.additional.push_back(std::move(rr));
    }
  }
  if (r.remaining() != 0)
    throw WireError("trailing octets after message");
  return msg;
}

Bytes encode_message(const DnsMessage& msg)
{
  Bytes out;
  append_u16(out, msg.id);
  append_u16(out, flags_to_u16(msg.flags));
  append_u16(out, msg.question ? 1 : 0);
  append_u16(out, static_cast<uint16_t>(msg.answers.size()));
  append_u16(out, static_cast<uint16_t>(msg.authority.size()));
  size_t arcount = msg.additional.size() + (msg.edns ? 1 : 0);
  append_u16(out, static_cast<uint16_t>(arcount));

  if (msg.question) {
    Bytes name = msg.question->name.to_wire();
    out.insert(out.end(), name.begin(), name.end());
    append_u16(out, msg.question->rrtype);
    append_u16(out, msg.question->rrclass);
  }
  for (const ResourceRecord& rr : msg.answers)
    encode_rr(out, rr);
  for (const ResourceRecord& rr : msg.authority)
    encode_rr(out, rr);
  for (const ResourceRecord& rr : msg.additional)
    encode_rr(out, rr);
  if (msg.edns) {
    ResourceRecord opt;
    opt.rrtype = TYPE_OPT;
    opt.rrclass = msg.edns->udp_payload_size;
    opt.ttl = msg.edns->do_bit ? 0x8000u : 0u;
    encode_rr(out, opt);
  }
  if (out.size() > MAX_MESSAGE_LEN)
    throw WireError("message exceeds 65,535 octets");
  return out;
}

Bytes canonical_name(const DomainName& name)
{
  return name.canonical_wire();
}

Bytes canonical_rrset(const Rrset& rrset)
{
  if (rrset.rdatas.empty())
    throw WireError("empty RRset");

  // In-scope rdata types carry no embedded names, so the canonical rdata is
  // the stored rdata verbatim.
  std::vector<Bytes> sorted = rrset.rdatas;
  std::sort(sorted.begin(), sorted.end());

  Bytes owner = rrset.name.canonical_wire();
  Bytes out;
  for (const Bytes& rdata : sorted) {
    out.insert(out.end(), owner.begin(), owner.end());
    append_u16(out, rrset.rrtype);
    append_u16(out, rrset.rrclass);
    append_u32(out, rrset.ttl);
    append_u16(out, static_cast<uint16_t>(rdata.size()));
    out.insert(out.end(), rdata.begin(), rdata.end());
  }
  return out;
}

Bytes frame_tcp(ByteView msg)
{
  if (msg.size() > MAX_MESSAGE_LEN)
    throw WireError("message exceeds 65,535 octets");
  Bytes out;
  out.reserve(msg.size() + 2);
  append_u16(out, static_cast<uint16_t>(msg.size()));
  out.insert(out.end(), msg.begin(), msg.end());
  return out;
}

namespace {
const std::map<uint16_t, std::string> type_names = {
  {TYPE_A, "A"},         {TYPE_TXT, "TXT"},     {TYPE_AAAA, "AAAA"},
  {TYPE_OPT, "OPT"},     {TYPE_DNSKEY, "DNSKEY"}, {TYPE_RRSIG, "RRSIG"},
  {2, "NS"},             {5, "CNAME"},          {6, "SOA"},
  {12, "PTR"},           {15, "MX"},
};
} // namespace

std::string rrtype_to_string(uint16_t rrtype)
{
  auto it = type_names.find(rrtype);
  if (it != type_names.end())
    return it->second;
  return "TYPE" + std::to_string(rrtype);
}

uint16_t rrtype_from_string(std::string_view text)
{
  std::string upper(text);
  for (char& c : upper)
    c = static_cast<char>(::toupper(static_cast<unsigned char>(c)));
  for (const auto& [code, name] : type_names) {
    if (name == upper)
      return code;
  }
  if (upper.rfind("TYPE", 0) == 0) {
    int v = std::stoi(upper.substr(4));
    if (v >= 0 && v <= 0xffff)
      return static_cast<uint16_t>(v);
  }
  throw WireError("unknown record type '" + std::string(text) + "'");
}

} // namespace pqdns::wire
