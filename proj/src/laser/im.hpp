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

#include "laser/node.hpp"

namespace laser::proto {

// Island Manager: the authentication and registration authority. Held by
// one node (here co-located with the anchor); keeps the registry of
// pre-shared secrets, live sessions, cluster routing keys, and
// registered prefixes, and answers the four manager-addressed message
// families (onboard, auth, set-prefix, get-prefix) plus key refresh.
class ImNode {
 public:
  ImNode(std::string id, Params params, HostEnv env, ndn::Forwarder& forwarder);

  ndn::FaceId app_face() const { return app_face_; }
  void handle_packet(const Bytes& wire);

  // --- registry management ---
  void provision(const std::string& node_id, crypto::PresharedKey pin);
  bool is_provisioned(const std::string& node_id) const { return pins_.count(node_id) > 0; }

  // Creates the cluster key for a new anchor (epoch 1).
  crypto::RoutingAuthKey register_anchor(const std::string& anchor_id);
  const crypto::RoutingAuthKey& rak_of(const std::string& anchor_id) const;

  // Rolls the cluster key. Members with live authenticated sessions get a
  // refresh notification; members whose sessions lapsed are dropped from
  // the registry and must onboard again. The anchor itself is updated
  // through on_anchor_key_update (manager and anchors stay synchronized).
  struct RefreshResult {
    crypto::RoutingAuthKey new_key;
    std::vector<std::string> notified;
    std::vector<std::string> excluded;
  };
  RefreshResult refresh_rak(const std::string& anchor_id);

  // The per-member key-delivery packets for the current epoch: payload is
  // the key record sealed under the member's session encryption key and
  // the packet is signed under its session authentication key.
  std::vector<ndn::Data> build_rak_push(const std::string& anchor_id);

  std::optional<ndn::Name> registered_prefix(const std::string& node_id) const;
  const std::map<std::string, std::string>& registrations() const { return registered_; }

  struct SessionView {
    crypto::Nonce16 node_nonce{};
    crypto::Nonce16 manager_nonce{};
    std::string anchor_id;
    bool authenticated = false;
  };
  std::optional<SessionView> session(const std::string& node_id) const;
  void expire_session(const std::string& node_id);

  size_t parked_requests() const { return parked_.size(); }
  std::string state_digest() const;

  std::function<void(const crypto::RoutingAuthKey&)> on_anchor_key_update;

 private:
  struct Session {
    crypto::Nonce16 node_nonce{};
    crypto::Nonce16 manager_nonce{};
    crypto::TransientKeys keys;
    std::string anchor_id;
    uint64_t expires_ns = 0;  // 0 = no expiry
    bool authenticated = false;
  };
  struct AnchorKeys {
    crypto::RoutingAuthKey current;
    std::optional<crypto::RoutingAuthKey> previous;
    uint64_t previous_until_ns = 0;
  };

  void on_interest(const ndn::Interest& interest, ByteView wire);
  void handle_onboarding(const ndn::Interest& interest, ByteView wire);
  void handle_auth(const ndn::Interest& interest);
  void handle_set_prefix(const ndn::Interest& interest);
  void handle_get_prefix(const ndn::Interest& interest);
  void handle_rak_fetch(const ndn::Interest& interest);

  bool verify_anchor_signed(const std::string& anchor_id, ByteView signed_portion,
                            const std::optional<ndn::SignatureInfo>& sig) const;
  const crypto::LongLivedKeys& long_lived_for(const std::string& node_id);
  Session* live_session(const std::string& node_id);
  ndn::Data make_key_delivery(const ndn::Name& name, const Session& session,
                              const crypto::RoutingAuthKey& rak,
                              const std::string& node_id);
  void publish(ndn::Data& data);
  void send_interest(ndn::Interest& interest);
  void log_exchange(sim::LogKind kind, const std::string& subject, const char* verb);
  void log_drop(const char* reason, const ndn::Name& name);
  uint64_t now_ns() const { return env_.queue->now_ns(); }

  std::string id_;
  Params params_;
  HostEnv env_;
  ndn::Forwarder& fwd_;
  ndn::FaceId app_face_;

  std::map<std::string, crypto::PresharedKey> pins_;
  std::map<std::string, crypto::LongLivedKeys> long_lived_cache_;
  std::map<std::string, Session> sessions_;
  std::map<std::string, AnchorKeys> anchors_;
  std::map<std::string, std::string> registered_;  // node -> anchor
  std::vector<std::pair<Bytes, uint64_t>> parked_;  // held onboarding requests
};

}  // namespace laser::proto
