// Copyright 2026 the laser-ndn authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ndn/packet.hpp"

namespace laser::ndn {

namespace {

void write_signature(TlvWriter& w, const SignatureInfo& sig) {
  w.put(tlv::kKeyLocator, sig.key_locator.encode());
  w.put(tlv::kSignatureValue, sig.value);
}

std::optional<SignatureInfo> read_signature(TlvReader& r) {
  SignatureInfo sig;
  auto locator = r.expect(tlv::kKeyLocator);
  if (!locator) {
    return std::nullopt;
  }
  auto name = Name::decode(*locator);
  if (!name) {
    return std::nullopt;
  }
  sig.key_locator = std::move(*name);
  auto value = r.expect(tlv::kSignatureValue);
  if (!value || value->size() != sig.value.size()) {
    return std::nullopt;
  }
  std::copy(value->begin(), value->end(), sig.value.begin());
  return sig;
}

}  // namespace

Bytes Interest::encode() const {
  TlvWriter body;
  Bytes name_wire = name.encode();
  body.put(tlv::kName, ByteView(name_wire).subspan(3));  // re-nest the value
  body.put_u32(tlv::kNonce, nonce);
  body.put_u32(tlv::kLifetime, lifetime_ms);
  if (signature) {
    write_signature(body, *signature);
  }
  TlvWriter out;
  out.put(tlv::kInterest, body.bytes());
  return out.take();
}

std::optional<Interest> Interest::decode(ByteView wire) {
  TlvReader outer(wire);
  auto body = outer.expect(tlv::kInterest);
  if (!body) {
    return std::nullopt;
  }
  TlvReader r(*body);
  Interest interest;
  auto name_value = r.expect(tlv::kName);
  if (!name_value) {
    return std::nullopt;
  }
  auto name = Name::decode_value(*name_value);
  if (!name) {
    return std::nullopt;
  }
  interest.name = std::move(*name);
  auto nonce = r.expect(tlv::kNonce);
  if (!nonce) {
    return std::nullopt;
  }
  auto nonce_v = TlvReader::as_u32(*nonce);
  if (!nonce_v) {
    return std::nullopt;
  }
  interest.nonce = *nonce_v;
  auto lifetime = r.expect(tlv::kLifetime);
  if (!lifetime) {
    return std::nullopt;
  }
  auto lifetime_v = TlvReader::as_u32(*lifetime);
  if (!lifetime_v || *lifetime_v == 0) {
    return std::nullopt;
  }
  interest.lifetime_ms = *lifetime_v;
  if (!r.done()) {
    auto sig = read_signature(r);
    if (!sig) {
      return std::nullopt;
    }
    interest.signature = std::move(*sig);
  }
  return interest;
}

void Interest::sign(const crypto::Key128& key, const Name& key_locator) {
  SignatureInfo sig;
  sig.key_locator = key_locator;
  sig.value = crypto::hmac_sign(key, signed_portion());
  signature = std::move(sig);
}

bool Interest::verify(const crypto::Key128& key) const {
  if (!signature) {
    return false;
  }
  return crypto::hmac_verify(key, signed_portion(), signature->value);
}

Bytes Data::signed_portion() const {
  Bytes out = name.encode();
  append(out, content);
  return out;
}

Bytes Data::encode() const {
  TlvWriter body;
  Bytes name_wire = name.encode();
  body.put(tlv::kName, ByteView(name_wire).subspan(3));
  body.put(tlv::kContent, content);
  write_signature(body, signature);
  TlvWriter out;
  out.put(tlv::kData, body.bytes());
  return out.take();
}

std::optional<Data> Data::decode(ByteView wire) {
  TlvReader outer(wire);
  auto body = outer.expect(tlv::kData);
  if (!body) {
    return std::nullopt;
  }
  TlvReader r(*body);
  Data data;
  auto name_value = r.expect(tlv::kName);
  if (!name_value) {
    return std::nullopt;
  }
  auto name = Name::decode_value(*name_value);
  if (!name) {
    return std::nullopt;
  }
  data.name = std::move(*name);
  auto content = r.expect(tlv::kContent);
  if (!content) {
    return std::nullopt;
  }
  data.content.assign(content->begin(), content->end());
  auto sig = read_signature(r);
  if (!sig) {
    return std::nullopt;  // network-layer signatures are mandatory
  }
  data.signature = std::move(*sig);
  return data;
}

void Data::sign(const crypto::Key128& key, const Name& key_locator) {
  signature.key_locator = key_locator;
  signature.value = crypto::hmac_sign(key, signed_portion());
}

bool Data::verify(const crypto::Key128& key) const {
  return crypto::hmac_verify(key, signed_portion(), signature.value);
}

PacketKind packet_kind(ByteView wire) {
  if (wire.size() < 3) {
    return PacketKind::Malformed;
  }
  if (wire[0] == tlv::kInterest) {
    return PacketKind::Interest;
  }
  if (wire[0] == tlv::kData) {
    return PacketKind::Data;
  }
  return PacketKind::Malformed;
}

}  // namespace laser::ndn
