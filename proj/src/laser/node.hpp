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

#include <set>

#include "laser/dfb.hpp"
#include "laser/messages.hpp"
#include "laser/params.hpp"
#include "ndn/forwarder.hpp"
#include "netsim/event_queue.hpp"
#include "netsim/metrics.hpp"
#include "netsim/rng.hpp"

namespace laser::proto {

// Services the hosting simulation provides to a protocol endpoint.
struct HostEnv {
  sim::EventQueue* queue = nullptr;
  sim::Rng* rng = nullptr;
  sim::MetricsLog* log = nullptr;
  int node_index = -1;
  std::function<int32_t(const std::string&)> index_of;
  std::function<void(int)> on_onboarded;
};

// Onboarding state machine of one island member. The same class serves
// standard nodes and anchors; an anchor is born onboarded at hop
// distance zero and never runs discovery itself.
//
// Lifecycle of a standard node:
//   Idle -> Discovering   broadcast discovery, collect relay offers
//        -> Authenticating prove knowledge of the pre-shared secret,
//                          receive the cluster routing key
//        -> Advertising    push route state up the tree (set-next chain)
//        -> Onboarded      routable; relays discovery for its neighbors
class LaserNode {
 public:
  enum class Phase { Idle, Discovering, Authenticating, Advertising, Onboarded };

  LaserNode(std::string id, LinkAddr addr, Params params, HostEnv env,
            ndn::Forwarder& forwarder);

  void set_preshared(crypto::PresharedKey pin) { pin_ = std::move(pin); }
  void make_anchor(const std::string& manager_id, const crypto::RoutingAuthKey& rak);

  // Power-on: standard nodes begin discovery immediately.
  void start();
  bool started() const { return started_; }

  ndn::FaceId app_face() const { return app_face_; }
  // Packets the forwarder delivers to this application.
  void handle_packet(const Bytes& wire);

  // Sends a plain Interest (used for application probes) and tracks
  // whether a Data came back for it.
  void express_interest(const ndn::Name& name);
  bool probe_satisfied(const ndn::Name& name) const;

  // --- introspection ---
  const std::string& id() const { return id_; }
  const LinkAddr& addr() const { return addr_; }
  bool is_anchor() const { return anchor_; }
  Phase phase() const { return phase_; }
  HopDistance hops() const { return my_hops_; }
  const std::optional<LinkAddr>& next_hop() const { return next_hop_addr_; }
  const std::string& upstream_id() const { return next_hop_id_; }
  const std::string& anchor_id() const { return anchor_id_; }
  const std::string& manager_id() const { return manager_id_; }
  const Dfb& dfb() const { return dfb_; }
  Dfb& dfb() { return dfb_; }
  const std::optional<crypto::RoutingAuthKey>& routing_key() const { return rak_current_; }
  uint64_t onboarded_at_ns() const { return onboarded_at_ns_; }
  const std::optional<crypto::TransientKeys>& session_keys() const { return transient_; }

  // Protocol-state fingerprint used by the security tests: phase, path,
  // key epochs, and routing tables. Excludes timers and counters.
  std::string state_digest() const;

  void install_routing_key(const crypto::RoutingAuthKey& rak, uint64_t now_ns);
  bool verify_with_rak(ByteView signed_portion, const crypto::Tag32& tag) const;

 private:
  friend class ClusterStrategy;
  friend class DiscoveryStrategy;

  struct Offer {
    LinkAddr relay_addr;
    std::string relay_id;
    uint32_t hops = 0;
    std::string anchor_id;
    crypto::Nonce16 node_nonce{};
    crypto::Nonce16 manager_nonce{};
  };

  struct PendingAdvert {
    std::optional<ndn::Name> downstream_name;  // set-next to acknowledge back
    std::string origin_id;
    int retries = 0;
    uint64_t token = 0;
  };

  // -- discovery / joining --
  void begin_discovery(bool fresh);
  void handle_network_auth(const ndn::Data& data);
  void commit_offer();
  void send_auth_request();
  void handle_key_delivery(const ndn::Data& data);
  void send_own_advert();
  void complete_onboarding(const ndn::Data& ack);
  void restart_discovery();

  // -- serving the island --
  void handle_discover(const ndn::Interest& interest);
  void relay_onboarding_request(const DiscoveryRequest& req,
                                const ndn::Name& discover_name);
  void handle_remapped_auth(const ndn::Data& data);
  void handle_set_next(const ndn::Interest& interest);
  void handle_chain_ack(const ndn::Data& data);
  void handle_wakeup();
  void handle_rak_notify(const ndn::Interest& interest);
  void handle_rak_fetch_reply(const ndn::Data& data);
  void answer_echo(const ndn::Interest& interest);

  void on_interest(const ndn::Interest& interest);
  void on_data(const ndn::Data& data);

  void send_packet(const Bytes& wire);
  void send_interest(ndn::Interest& interest);
  void publish_data(ndn::Data& data);
  void publish_ack(const ndn::Name& name);
  void send_advert_interest(const ndn::Name& name, PendingAdvert& pending);
  const crypto::LongLivedKeys& long_lived();
  void log_drop(const char* reason, const ndn::Name& name);
  uint64_t now_ns() const { return env_.queue->now_ns(); }
  uint64_t s_to_ns(double s) const { return sim::seconds_to_ns(s); }

  std::string id_;
  LinkAddr addr_;
  Params params_;
  HostEnv env_;
  ndn::Forwarder& fwd_;
  ndn::FaceId app_face_;

  bool started_ = false;
  bool anchor_ = false;
  Phase phase_ = Phase::Idle;

  crypto::PresharedKey pin_;
  std::optional<crypto::LongLivedKeys> long_lived_;
  std::optional<crypto::TransientKeys> transient_;
  std::optional<crypto::RoutingAuthKey> rak_current_;
  std::optional<crypto::RoutingAuthKey> rak_previous_;
  uint64_t rak_previous_until_ns_ = 0;

  HopDistance my_hops_;
  std::optional<LinkAddr> next_hop_addr_;
  std::string next_hop_id_;
  std::string anchor_id_;
  std::string manager_id_;

  // discovery round state
  crypto::Nonce16 round_nonce_{};
  ndn::Name discover_name_;
  std::optional<Offer> best_offer_;
  int extra_rounds_used_ = 0;
  uint64_t round_token_ = 0;
  uint64_t commit_deadline_ns_ = 0;

  // auth + advertisement retry state
  ndn::Name auth_name_;
  int auth_retries_ = 0;
  uint64_t auth_token_ = 0;
  ndn::Name own_advert_name_;
  uint64_t onboarded_at_ns_ = 0;
  bool wakeup_scheduled_ = false;

  Dfb dfb_;
  bool cluster_strategy_registered_ = false;
  bool routable_prefix_registered_ = false;

  // relays: onboarding-request name -> original discovery name
  std::map<Bytes, std::pair<ndn::Name, uint64_t>> pending_remaps_;
  // advertisement chains: upstream message name -> bookkeeping
  std::map<Bytes, PendingAdvert> pending_adverts_;

  // key refresh in flight
  std::optional<ndn::Name> pending_rak_notify_;
  std::optional<ndn::Name> pending_rak_fetch_;

  std::set<Bytes> pending_probes_;
  std::set<Bytes> satisfied_probes_;
};

// Strategy for the one-hop broadcast prefixes (discovery and wakeup):
// Interests from the local application go out every wireless face as
// broadcast frames; Interests heard over the air go up to the
// application and are not re-broadcast.
class DiscoveryStrategy : public ndn::Strategy {
 public:
  explicit DiscoveryStrategy(LaserNode& node) : node_(node) {}
  std::vector<ndn::HopTarget> decide(const ndn::Interest&, ndn::FaceId in_face,
                                     const std::optional<LinkAddr>&, const ndn::FibEntry*,
                                     ndn::Forwarder& fwd) override;

 private:
  LaserNode& node_;
};

// Cluster routing strategy: names under the anchor prefix and manager-
// or node-addressed names route on the downstream table, falling back
// to the next hop toward the anchor when the lookup misses.
class ClusterStrategy : public ndn::Strategy {
 public:
  explicit ClusterStrategy(LaserNode& node) : node_(node) {}
  std::vector<ndn::HopTarget> decide(const ndn::Interest&, ndn::FaceId in_face,
                                     const std::optional<LinkAddr>&, const ndn::FibEntry*,
                                     ndn::Forwarder& fwd) override;

 private:
  LaserNode& node_;
};

// Cache admission for the content store: session-bound control traffic
// is not worth caching; prefix answers and application data are.
bool is_cacheable_name(const ndn::Name& name);

}  // namespace laser::proto
