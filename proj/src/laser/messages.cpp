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

#include "laser/messages.hpp"

#include <charconv>

namespace laser::proto {

namespace {

constexpr const char* kInfiniteComp = "inf";
constexpr const char* kKeysComp = "keys";

std::optional<uint32_t> parse_u32(const std::string& s) {
  if (s.empty()) {
    return std::nullopt;
  }
  uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    return std::nullopt;
  }
  return value;
}

std::optional<LinkAddr> addr_from_component(const std::string& comp) {
  if (comp.size() != 16) {
    return std::nullopt;
  }
  try {
    return LinkAddr::from_hex(comp);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace

std::string hops_to_component(HopDistance hops) {
  return hops ? std::to_string(*hops) : kInfiniteComp;
}

std::optional<HopDistance> hops_from_component(const std::string& component) {
  if (component == kInfiniteComp) {
    return HopDistance{};
  }
  auto v = parse_u32(component);
  if (!v) {
    return std::nullopt;
  }
  return HopDistance{*v};
}

std::optional<crypto::Nonce16> nonce_from_hex(const std::string& hex) {
  if (hex.size() != 32) {
    return std::nullopt;
  }
  crypto::Nonce16 out;
  try {
    Bytes b = hex_decode(hex);
    std::copy(b.begin(), b.end(), out.begin());
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return out;
}

ndn::Name DiscoveryRequest::to_name() const {
  ndn::Name name;
  name.append(kDiscoverComp)
      .append(node_id)
      .append(hex_encode(node_nonce))
      .append(hops_to_component(hops));
  return name;
}

std::optional<DiscoveryRequest> DiscoveryRequest::parse(const ndn::Name& name) {
  if (name.size() != 4 || name.at(0) != kDiscoverComp) {
    return std::nullopt;
  }
  DiscoveryRequest req;
  req.node_id = name.at(1);
  auto nonce = nonce_from_hex(name.at(2));
  auto hops = hops_from_component(name.at(3));
  if (req.node_id.empty() || !nonce || !hops) {
    return std::nullopt;
  }
  req.node_nonce = *nonce;
  req.hops = *hops;
  return req;
}

ndn::Name OnboardingRequest::to_name() const {
  ndn::Name name;
  name.append(manager_id)
      .append(kOnboardComp)
      .append(node_id)
      .append(hex_encode(node_nonce))
      .append(relay_addr.to_hex())
      .append(std::to_string(relay_hops))
      .append(anchor_id);
  return name;
}

std::optional<OnboardingRequest> OnboardingRequest::parse(const ndn::Name& name) {
  if (name.size() != 7 || name.at(1) != kOnboardComp) {
    return std::nullopt;
  }
  OnboardingRequest req;
  req.manager_id = name.at(0);
  req.node_id = name.at(2);
  auto nonce = nonce_from_hex(name.at(3));
  auto addr = addr_from_component(name.at(4));
  auto hops = parse_u32(name.at(5));
  req.anchor_id = name.at(6);
  if (req.manager_id.empty() || req.node_id.empty() || req.anchor_id.empty() ||
      !nonce || !addr || !hops) {
    return std::nullopt;
  }
  req.node_nonce = *nonce;
  req.relay_addr = *addr;
  req.relay_hops = *hops;
  return req;
}

Bytes NetworkAuthPayload::encode() const {
  ndn::TlvWriter w;
  w.put(ndn::tlv::kNodeId, node_id);
  w.put(ndn::tlv::kNodeNonce, node_nonce);
  w.put(ndn::tlv::kManagerId, manager_id);
  w.put(ndn::tlv::kManagerNonce, manager_nonce);
  w.put(ndn::tlv::kLinkAddrField, relay_addr.octets);
  w.put_u32(ndn::tlv::kHopCount, relay_hops);
  w.put(ndn::tlv::kAnchorId, anchor_id);
  return w.take();
}

std::optional<NetworkAuthPayload> NetworkAuthPayload::parse(ByteView payload) {
  ndn::TlvReader r(payload);
  NetworkAuthPayload out;
  auto node_id = r.expect(ndn::tlv::kNodeId);
  auto node_nonce = r.expect(ndn::tlv::kNodeNonce);
  auto manager_id = r.expect(ndn::tlv::kManagerId);
  auto manager_nonce = r.expect(ndn::tlv::kManagerNonce);
  auto addr = r.expect(ndn::tlv::kLinkAddrField);
  auto hops = r.expect(ndn::tlv::kHopCount);
  auto anchor = r.expect(ndn::tlv::kAnchorId);
  if (!node_id || !node_nonce || node_nonce->size() != 16 || !manager_id ||
      !manager_nonce || manager_nonce->size() != 16 || !addr || addr->size() != 8 ||
      !hops || !anchor) {
    return std::nullopt;
  }
  out.node_id = to_string(*node_id);
  std::copy(node_nonce->begin(), node_nonce->end(), out.node_nonce.begin());
  out.manager_id = to_string(*manager_id);
  std::copy(manager_nonce->begin(), manager_nonce->end(), out.manager_nonce.begin());
  std::copy(addr->begin(), addr->end(), out.relay_addr.octets.begin());
  auto hops_v = ndn::TlvReader::as_u32(*hops);
  if (!hops_v) {
    return std::nullopt;
  }
  out.relay_hops = *hops_v;
  out.anchor_id = to_string(*anchor);
  return out;
}

ndn::Name AuthRequest::to_name() const {
  ndn::Name name;
  name.append(manager_id)
      .append(kAuthComp)
      .append(node_id)
      .append(hex_encode(node_nonce))
      .append(hex_encode(manager_nonce))
      .append(anchor_id);
  return name;
}

std::optional<AuthRequest> AuthRequest::parse(const ndn::Name& name) {
  if (name.size() != 6 || name.at(1) != kAuthComp) {
    return std::nullopt;
  }
  AuthRequest req;
  req.manager_id = name.at(0);
  req.node_id = name.at(2);
  auto node_nonce = nonce_from_hex(name.at(3));
  auto manager_nonce = nonce_from_hex(name.at(4));
  req.anchor_id = name.at(5);
  if (req.manager_id.empty() || req.node_id.empty() || req.anchor_id.empty() ||
      !node_nonce || !manager_nonce) {
    return std::nullopt;
  }
  req.node_nonce = *node_nonce;
  req.manager_nonce = *manager_nonce;
  return req;
}

ndn::Name SetNext::to_name() const {
  ndn::Name name;
  name.append(upstream_id)
      .append(kSetNextComp)
      .append(origin_id)
      .append(downstream_addr.to_hex());
  return name;
}

std::optional<SetNext> SetNext::parse(const ndn::Name& name) {
  if (name.size() != 4 || name.at(1) != kSetNextComp) {
    return std::nullopt;
  }
  SetNext msg;
  msg.upstream_id = name.at(0);
  msg.origin_id = name.at(2);
  auto addr = addr_from_component(name.at(3));
  if (msg.upstream_id.empty() || msg.origin_id.empty() || !addr) {
    return std::nullopt;
  }
  msg.downstream_addr = *addr;
  return msg;
}

ndn::Name SetPrefix::to_name() const {
  ndn::Name name;
  name.append(manager_id).append(kSetPrefixComp).append(node_id).append(anchor_id);
  return name;
}

std::optional<SetPrefix> SetPrefix::parse(const ndn::Name& name) {
  if (name.size() != 4 || name.at(1) != kSetPrefixComp) {
    return std::nullopt;
  }
  SetPrefix msg;
  msg.manager_id = name.at(0);
  msg.node_id = name.at(2);
  msg.anchor_id = name.at(3);
  if (msg.manager_id.empty() || msg.node_id.empty() || msg.anchor_id.empty()) {
    return std::nullopt;
  }
  return msg;
}

ndn::Name PrefixQuery::to_name() const {
  ndn::Name name;
  name.append(manager_id).append(kGetPrefixComp).append(node_id);
  return name;
}

std::optional<PrefixQuery> PrefixQuery::parse(const ndn::Name& name) {
  if (name.size() != 3 || name.at(1) != kGetPrefixComp) {
    return std::nullopt;
  }
  PrefixQuery q;
  q.manager_id = name.at(0);
  q.node_id = name.at(2);
  if (q.manager_id.empty() || q.node_id.empty()) {
    return std::nullopt;
  }
  return q;
}

ndn::Name RakNotify::to_name() const {
  ndn::Name name;
  name.append(node_id).append(kRakNotifyComp).append(std::to_string(epoch));
  return name;
}

std::optional<RakNotify> RakNotify::parse(const ndn::Name& name) {
  if (name.size() != 3 || name.at(1) != kRakNotifyComp) {
    return std::nullopt;
  }
  RakNotify msg;
  msg.node_id = name.at(0);
  auto epoch = parse_u32(name.at(2));
  if (msg.node_id.empty() || !epoch) {
    return std::nullopt;
  }
  msg.epoch = *epoch;
  return msg;
}

ndn::Name RakFetch::to_name() const {
  ndn::Name name;
  name.append(manager_id)
      .append(kRakFetchComp)
      .append(node_id)
      .append(std::to_string(epoch));
  return name;
}

std::optional<RakFetch> RakFetch::parse(const ndn::Name& name) {
  if (name.size() != 4 || name.at(1) != kRakFetchComp) {
    return std::nullopt;
  }
  RakFetch msg;
  msg.manager_id = name.at(0);
  msg.node_id = name.at(2);
  auto epoch = parse_u32(name.at(3));
  if (msg.manager_id.empty() || msg.node_id.empty() || !epoch) {
    return std::nullopt;
  }
  msg.epoch = *epoch;
  return msg;
}

Bytes encode_relay_envelope(const std::string& relay_id, ByteView inner_data_wire) {
  ndn::TlvWriter w;
  w.put(ndn::tlv::kRelayId, relay_id);
  w.put(ndn::tlv::kWrappedPacket, inner_data_wire);
  return w.take();
}

std::optional<RelayEnvelope> parse_relay_envelope(ByteView payload) {
  ndn::TlvReader r(payload);
  auto relay = r.expect(ndn::tlv::kRelayId);
  auto inner = r.expect(ndn::tlv::kWrappedPacket);
  if (!relay || relay->empty() || !inner) {
    return std::nullopt;
  }
  RelayEnvelope env;
  env.relay_id = to_string(*relay);
  env.inner_data_wire = Bytes(inner->begin(), inner->end());
  return env;
}

Bytes encode_rak_record(const crypto::RoutingAuthKey& rak) {
  ndn::TlvWriter w;
  w.put(ndn::tlv::kKeyBytes, rak.key);
  w.put_u32(ndn::tlv::kKeyEpoch, rak.epoch);
  w.put(ndn::tlv::kAnchorId, rak.anchor_id);
  return w.take();
}

std::optional<crypto::RoutingAuthKey> parse_rak_record(ByteView plain) {
  ndn::TlvReader r(plain);
  auto key = r.expect(ndn::tlv::kKeyBytes);
  auto epoch = r.expect(ndn::tlv::kKeyEpoch);
  auto anchor = r.expect(ndn::tlv::kAnchorId);
  if (!key || key->size() != 16 || !epoch || !anchor) {
    return std::nullopt;
  }
  auto epoch_v = ndn::TlvReader::as_u32(*epoch);
  if (!epoch_v) {
    return std::nullopt;
  }
  crypto::RoutingAuthKey rak;
  std::copy(key->begin(), key->end(), rak.key.begin());
  rak.epoch = *epoch_v;
  rak.anchor_id = to_string(*anchor);
  return rak;
}

Bytes encode_status(Status status) {
  ndn::TlvWriter w;
  uint8_t v = static_cast<uint8_t>(status);
  w.put(ndn::tlv::kStatus, ByteView(&v, 1));
  return w.take();
}

std::optional<Status> parse_status(ByteView payload) {
  ndn::TlvReader r(payload);
  auto v = r.expect(ndn::tlv::kStatus);
  if (!v || v->size() != 1) {
    return std::nullopt;
  }
  return static_cast<Status>((*v)[0]);
}

Bytes encode_prefix_payload(const ndn::Name& prefix) {
  ndn::TlvWriter w;
  w.put(ndn::tlv::kPrefix, prefix.encode());
  return w.take();
}

std::optional<ndn::Name> parse_prefix_payload(ByteView payload) {
  ndn::TlvReader r(payload);
  auto v = r.expect(ndn::tlv::kPrefix);
  if (!v) {
    return std::nullopt;
  }
  return ndn::Name::decode(*v);
}

ndn::Name ak_locator(const std::string& node_id) {
  ndn::Name name;
  name.append(kKeysComp).append(node_id).append("AK");
  return name;
}

ndn::Name tak_locator(const std::string& node_id, const crypto::Nonce16& node_nonce,
                      const crypto::Nonce16& manager_nonce) {
  ndn::Name name;
  name.append(kKeysComp)
      .append(node_id)
      .append(hex_encode(node_nonce))
      .append(hex_encode(manager_nonce))
      .append("TAK");
  return name;
}

ndn::Name rak_locator(const std::string& anchor_id, uint32_t epoch) {
  ndn::Name name;
  name.append(kKeysComp).append(anchor_id).append("RAK").append(std::to_string(epoch));
  return name;
}

}  // namespace laser::proto
