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

#pragma once

#include <optional>
#include <string>

#include "crypto/keys.hpp"
#include "ndn/packet.hpp"
#include "util/linkaddr.hpp"

// Control-message catalog. Name templates (see docs/wire-format.md):
//
//   discovery request   /discover/<node>/<nonce>/<hops>
//   onboarding request  /<manager>/onboard/<node>/<nonce>/<relay-mac>/<relay-hops>/<anchor>
//   network auth        Data under the onboarding-request name, payload signed
//                       with the node's long-lived authentication key; relays
//                       republish it under the original discovery name inside
//                       an envelope that also names the relay
//   node auth           /<manager>/auth/<node>/<node-nonce>/<manager-nonce>/<anchor>
//   route key delivery  Data under the auth name; payload = iv || aes-cbc(tek, key record)
//   set-next            /<upstream>/set-next/<origin>/<downstream-mac>
//   set-prefix          /<manager>/set-prefix/<node>/<anchor>
//   ack                 Data under the message it answers
//   wakeup              /wakeup
//   prefix query        /<manager>/get-prefix/<node>
//   key refresh notify  /<node>/rak/<epoch>
//   key refresh fetch   /<manager>/rak-fetch/<node>/<epoch>

namespace laser::proto {

// Hop distance from an anchor; nullopt encodes "infinite" (not attached).
using HopDistance = std::optional<uint32_t>;

std::string hops_to_component(HopDistance hops);
// Empty optional on parse failure; *result is the hop distance.
std::optional<HopDistance> hops_from_component(const std::string& component);

constexpr const char* kDiscoverComp = "discover";
constexpr const char* kWakeupComp = "wakeup";
constexpr const char* kOnboardComp = "onboard";
constexpr const char* kAuthComp = "auth";
constexpr const char* kSetNextComp = "set-next";
constexpr const char* kSetPrefixComp = "set-prefix";
constexpr const char* kGetPrefixComp = "get-prefix";
constexpr const char* kRakNotifyComp = "rak";
constexpr const char* kRakFetchComp = "rak-fetch";
constexpr const char* kEchoComp = "echo";

struct DiscoveryRequest {
  std::string node_id;
  crypto::Nonce16 node_nonce{};
  HopDistance hops;

  ndn::Name to_name() const;
  static std::optional<DiscoveryRequest> parse(const ndn::Name& name);
};

struct OnboardingRequest {
  std::string manager_id;
  std::string node_id;
  crypto::Nonce16 node_nonce{};
  LinkAddr relay_addr;
  uint32_t relay_hops = 0;
  std::string anchor_id;

  ndn::Name to_name() const;
  static std::optional<OnboardingRequest> parse(const ndn::Name& name);
};

struct NetworkAuthPayload {
  std::string node_id;
  crypto::Nonce16 node_nonce{};
  std::string manager_id;
  crypto::Nonce16 manager_nonce{};
  LinkAddr relay_addr;
  uint32_t relay_hops = 0;
  std::string anchor_id;

  Bytes encode() const;
  static std::optional<NetworkAuthPayload> parse(ByteView payload);
};

struct AuthRequest {
  std::string manager_id;
  std::string node_id;
  crypto::Nonce16 node_nonce{};
  crypto::Nonce16 manager_nonce{};
  std::string anchor_id;

  ndn::Name to_name() const;
  static std::optional<AuthRequest> parse(const ndn::Name& name);
};

struct SetNext {
  std::string upstream_id;
  std::string origin_id;
  LinkAddr downstream_addr;

  ndn::Name to_name() const;
  static std::optional<SetNext> parse(const ndn::Name& name);
};

struct SetPrefix {
  std::string manager_id;
  std::string node_id;
  std::string anchor_id;

  ndn::Name to_name() const;
  static std::optional<SetPrefix> parse(const ndn::Name& name);
};

struct PrefixQuery {
  std::string manager_id;
  std::string node_id;

  ndn::Name to_name() const;
  static std::optional<PrefixQuery> parse(const ndn::Name& name);
};

struct RakNotify {
  std::string node_id;
  uint32_t epoch = 0;

  ndn::Name to_name() const;
  static std::optional<RakNotify> parse(const ndn::Name& name);
};

struct RakFetch {
  std::string manager_id;
  std::string node_id;
  uint32_t epoch = 0;

  ndn::Name to_name() const;
  static std::optional<RakFetch> parse(const ndn::Name& name);
};

// Relay envelope wrapping a network-auth Data for republication under the
// original discovery name. The inner packet stays bit-identical, so the
// joining node can verify the manager's signature through the remap.
Bytes encode_relay_envelope(const std::string& relay_id, ByteView inner_data_wire);
struct RelayEnvelope {
  std::string relay_id;
  Bytes inner_data_wire;
};
std::optional<RelayEnvelope> parse_relay_envelope(ByteView payload);

// Cluster routing key record carried (encrypted) in key-delivery payloads.
Bytes encode_rak_record(const crypto::RoutingAuthKey& rak);
std::optional<crypto::RoutingAuthKey> parse_rak_record(ByteView plain);

// Simple status payloads (acks, negative answers).
enum class Status : uint8_t { Ok = 0, NotFound = 1 };
Bytes encode_status(Status status);
std::optional<Status> parse_status(ByteView payload);

Bytes encode_prefix_payload(const ndn::Name& prefix);
std::optional<ndn::Name> parse_prefix_payload(ByteView payload);

// Key names announced in signature KeyLocator fields.
ndn::Name ak_locator(const std::string& node_id);
ndn::Name tak_locator(const std::string& node_id, const crypto::Nonce16& node_nonce,
                      const crypto::Nonce16& manager_nonce);
ndn::Name rak_locator(const std::string& anchor_id, uint32_t epoch);

std::optional<crypto::Nonce16> nonce_from_hex(const std::string& hex);

}  // namespace laser::proto
