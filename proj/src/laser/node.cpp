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

#include "laser/node.hpp"

namespace laser::proto {

using ndn::FaceId;
using ndn::HopTarget;

std::vector<HopTarget> DiscoveryStrategy::decide(const ndn::Interest&, FaceId in_face,
                                                 const std::optional<LinkAddr>&,
                                                 const ndn::FibEntry*,
                                                 ndn::Forwarder& fwd) {
  std::vector<HopTarget> targets;
  if (fwd.face_kind(in_face) == ndn::FaceKind::App) {
    for (FaceId face : fwd.wireless_faces()) {
      targets.push_back({face, LinkAddr::broadcast()});
    }
  } else {
    targets.push_back({node_.app_face(), std::nullopt});
  }
  return targets;
}

std::vector<HopTarget> ClusterStrategy::decide(const ndn::Interest& interest,
                                               FaceId in_face, const std::optional<LinkAddr>&,
                                               const ndn::FibEntry* fib_match,
                                               ndn::Forwarder& fwd) {
  const ndn::Name& name = interest.name;
  if (name.empty()) {
    return {};
  }

  auto to_faces = [&](const std::vector<FaceId>& faces) {
    std::vector<HopTarget> out;
    for (FaceId f : faces) {
      if (f != in_face) {
        out.push_back({f, std::nullopt});
      }
    }
    return out;
  };
  auto unicast = [&](const LinkAddr& hop) -> std::vector<HopTarget> {
    auto wireless = fwd.wireless_faces();
    if (wireless.empty()) {
      return {};
    }
    return {{wireless.front(), hop}};
  };

  const std::string& head = name.at(0);
  const std::string& cluster_root =
      node_.is_anchor() ? node_.id() : node_.anchor_id();

  // Names rooted under the anchor prefix route on their second component.
  if (!cluster_root.empty() && head == cluster_root && name.size() >= 2) {
    const std::string& dest = name.at(1);
    if (dest == node_.id()) {
      return fib_match ? to_faces(fib_match->next_faces) : std::vector<HopTarget>{};
    }
    if (auto hop = node_.dfb().lookup(dest)) {
      return unicast(*hop);
    }
    if (node_.is_anchor()) {
      // Not a known cluster member; maybe a service under the anchor's
      // own prefix, otherwise undeliverable.
      if (fib_match) {
        return to_faces(fib_match->next_faces);
      }
      return {};
    }
    if (node_.next_hop()) {
      return unicast(*node_.next_hop());
    }
    return {};
  }

  // Otherwise the first component addresses a node or the manager.
  if (head == node_.id()) {
    return fib_match ? to_faces(fib_match->next_faces) : std::vector<HopTarget>{};
  }
  if (auto hop = node_.dfb().lookup(head)) {
    return unicast(*hop);
  }
  if (fib_match) {
    // Locally registered application (the manager face on an anchor).
    return to_faces(fib_match->next_faces);
  }
  if (node_.next_hop()) {
    return unicast(*node_.next_hop());
  }
  return {};
}

bool is_cacheable_name(const ndn::Name& name) {
  if (name.empty()) {
    return false;
  }
  const std::string& head = name.at(0);
  if (head == kDiscoverComp || head == kWakeupComp || head == "keys") {
    return false;
  }
  if (name.size() >= 2) {
    const std::string& verb = name.at(1);
    if (verb == kOnboardComp || verb == kAuthComp || verb == kSetNextComp ||
        verb == kSetPrefixComp || verb == kRakNotifyComp || verb == kRakFetchComp) {
      return false;
    }
  }
  return true;
}

LaserNode::LaserNode(std::string id, LinkAddr addr, Params params, HostEnv env,
                     ndn::Forwarder& forwarder)
    : id_(std::move(id)),
      addr_(addr),
      params_(params),
      env_(std::move(env)),
      fwd_(forwarder) {
  app_face_ = fwd_.add_face(ndn::FaceKind::App,
                            [this](const Bytes& wire, const std::optional<LinkAddr>&) {
                              handle_packet(wire);
                            });
  fwd_.register_prefix(ndn::Name{id_}, app_face_);
  auto discovery = std::make_shared<DiscoveryStrategy>(*this);
  fwd_.register_strategy(ndn::Name{kDiscoverComp}, discovery);
  fwd_.register_strategy(ndn::Name{kWakeupComp}, discovery);
  fwd_.cs().set_admission(is_cacheable_name);
  fwd_.cs().set_capacity(params_.cs_capacity);
}

void LaserNode::make_anchor(const std::string& manager_id,
                            const crypto::RoutingAuthKey& rak) {
  anchor_ = true;
  started_ = true;
  phase_ = Phase::Onboarded;
  my_hops_ = 0;
  anchor_id_ = id_;
  manager_id_ = manager_id;
  rak_current_ = rak;
  if (!cluster_strategy_registered_) {
    fwd_.register_strategy(ndn::Name{}, std::make_shared<ClusterStrategy>(*this));
    cluster_strategy_registered_ = true;
  }
}

void LaserNode::start() {
  if (started_) {
    return;
  }
  started_ = true;
  env_.log->append({now_ns(), sim::LogKind::NodeStart, env_.node_index, -1, 0, id_});
  begin_discovery(true);
}

const crypto::LongLivedKeys& LaserNode::long_lived() {
  if (!long_lived_) {
    long_lived_ = crypto::derive_long_lived(pin_, id_, params_.kdf_iterations);
  }
  return *long_lived_;
}

void LaserNode::send_packet(const Bytes& wire) {
  fwd_.receive(app_face_, std::nullopt, wire);
}

void LaserNode::send_interest(ndn::Interest& interest) {
  interest.nonce = env_.rng->next_u32();
  send_packet(interest.encode());
}

void LaserNode::publish_data(ndn::Data& data) { send_packet(data.encode()); }

void LaserNode::publish_ack(const ndn::Name& name) {
  if (!rak_current_) {
    return;
  }
  ndn::Data ack;
  ack.name = name;
  ack.content = encode_status(Status::Ok);
  ack.sign(rak_current_->key, rak_locator(rak_current_->anchor_id, rak_current_->epoch));
  publish_data(ack);
}

void LaserNode::log_drop(const char* reason, const ndn::Name& name) {
  env_.log->append({now_ns(), sim::LogKind::PacketDrop, env_.node_index, -1, 0,
                    std::string(reason) + " " + name.to_uri()});
}

void LaserNode::begin_discovery(bool fresh) {
  if (fresh) {
    best_offer_.reset();
    extra_rounds_used_ = 0;
  }
  phase_ = Phase::Discovering;
  ++round_token_;
  round_nonce_ = env_.rng->nonce16();

  DiscoveryRequest req;
  req.node_id = id_;
  req.node_nonce = round_nonce_;
  req.hops = best_offer_ ? HopDistance{best_offer_->hops} : HopDistance{};
  discover_name_ = req.to_name();

  ndn::Interest interest;
  interest.name = discover_name_;
  interest.lifetime_ms = static_cast<uint32_t>(params_.discover_pit_lifetime_s * 1000);
  send_interest(interest);

  // Keep broadcasting while nothing has answered.
  uint64_t token = round_token_;
  env_.queue->after(s_to_ns(params_.discover_retry_s), [this, token]() {
    if (round_token_ == token && phase_ == Phase::Discovering && !best_offer_) {
      begin_discovery(false);
    }
  });
}

void LaserNode::handle_network_auth(const ndn::Data& data) {
  auto envelope = parse_relay_envelope(data.content);
  if (!envelope) {
    log_drop("na-malformed", data.name);
    return;
  }
  auto inner = ndn::Data::decode(envelope->inner_data_wire);
  if (!inner) {
    log_drop("na-malformed", data.name);
    return;
  }
  auto payload = NetworkAuthPayload::parse(inner->content);
  if (!payload || payload->node_id != id_ || payload->node_nonce != round_nonce_) {
    log_drop("na-mismatch", data.name);
    return;
  }
  if (!inner->verify(long_lived().ak)) {
    // Wrong key: not our island, or an impersonation attempt.
    log_drop("na-bad-sig", data.name);
    return;
  }

  uint32_t offered_hops = payload->relay_hops + 1;
  bool improved = false;
  if (!best_offer_ || offered_hops < best_offer_->hops) {
    best_offer_ = Offer{payload->relay_addr, envelope->relay_id, offered_hops,
                        payload->anchor_id,  round_nonce_,       payload->manager_nonce};
    manager_id_ = payload->manager_id;
    improved = true;
  }

  if (best_offer_->hops <= 1) {
    // Direct link to an anchor; no shorter path can exist.
    commit_offer();
    return;
  }
  if (improved && extra_rounds_used_ < params_.max_extra_rounds) {
    ++extra_rounds_used_;
    begin_discovery(false);
  }
  commit_deadline_ns_ = now_ns() + s_to_ns(params_.commit_quiet_s);
  env_.queue->at(commit_deadline_ns_, [this]() {
    if (phase_ == Phase::Discovering && best_offer_ && now_ns() >= commit_deadline_ns_) {
      commit_offer();
    }
  });
}

void LaserNode::commit_offer() {
  phase_ = Phase::Authenticating;
  ++round_token_;
  my_hops_ = best_offer_->hops;
  next_hop_addr_ = best_offer_->relay_addr;
  next_hop_id_ = best_offer_->relay_id;
  anchor_id_ = best_offer_->anchor_id;
  transient_ = crypto::derive_transient(long_lived().kdk, best_offer_->node_nonce,
                                        best_offer_->manager_nonce, params_.kdf_iterations);
  if (!cluster_strategy_registered_) {
    fwd_.register_strategy(ndn::Name{}, std::make_shared<ClusterStrategy>(*this));
    cluster_strategy_registered_ = true;
  }
  auth_retries_ = 0;
  send_auth_request();
}

void LaserNode::send_auth_request() {
  AuthRequest req;
  req.manager_id = manager_id_;
  req.node_id = id_;
  req.node_nonce = best_offer_->node_nonce;
  req.manager_nonce = best_offer_->manager_nonce;
  req.anchor_id = anchor_id_;
  auth_name_ = req.to_name();

  ndn::Interest interest;
  interest.name = auth_name_;
  interest.lifetime_ms = static_cast<uint32_t>(params_.pit_lifetime_s * 1000);
  interest.sign(transient_->tak,
                tak_locator(id_, req.node_nonce, req.manager_nonce));
  send_interest(interest);

  uint64_t token = ++auth_token_;
  env_.queue->after(s_to_ns(params_.request_retry_s), [this, token]() {
    if (phase_ != Phase::Authenticating || auth_token_ != token) {
      return;
    }
    if (auth_retries_ >= params_.request_max_retries) {
      restart_discovery();
      return;
    }
    ++auth_retries_;
    send_auth_request();
  });
}

void LaserNode::handle_key_delivery(const ndn::Data& data) {
  if (!data.verify(transient_->tak)) {
    log_drop("key-delivery-bad-sig", data.name);
    return;
  }
  auto plain = crypto::channel_open(transient_->tek, data.content);
  if (!plain) {
    log_drop("key-delivery-bad-payload", data.name);
    return;
  }
  auto record = parse_rak_record(*plain);
  if (!record || record->anchor_id != anchor_id_) {
    log_drop("key-delivery-mismatch", data.name);
    return;
  }
  install_routing_key(*record, now_ns());
  phase_ = Phase::Advertising;
  ++auth_token_;
  send_own_advert();
}

void LaserNode::send_own_advert() {
  SetNext msg;
  msg.upstream_id = next_hop_id_;
  msg.origin_id = id_;
  msg.downstream_addr = addr_;
  own_advert_name_ = msg.to_name();

  auto [it, inserted] = pending_adverts_.try_emplace(own_advert_name_.encode());
  PendingAdvert& pending = it->second;
  pending.downstream_name.reset();
  pending.origin_id = id_;
  if (inserted) {
    pending.retries = 0;
  }
  send_advert_interest(own_advert_name_, pending);
}

void LaserNode::send_advert_interest(const ndn::Name& name, PendingAdvert& pending) {
  // Arm the retry before sending: when the upstream is co-located (the
  // anchor talking to its manager) the whole ack loop runs inside
  // send_interest and may erase this very entry.
  uint64_t token = ++pending.token;
  Bytes key = name.encode();
  env_.queue->after(s_to_ns(params_.request_retry_s), [this, key, token]() {
    auto it = pending_adverts_.find(key);
    if (it == pending_adverts_.end() || it->second.token != token) {
      return;
    }
    PendingAdvert& p = it->second;
    if (p.retries >= params_.request_max_retries) {
      bool mine = !p.downstream_name.has_value();
      pending_adverts_.erase(it);
      if (mine && phase_ == Phase::Advertising) {
        // Advertisement never acknowledged; rejoin from scratch.
        restart_discovery();
      }
      return;
    }
    ++p.retries;
    auto name = ndn::Name::decode(key);
    if (name) {
      send_advert_interest(*name, it->second);
    }
  });

  ndn::Interest interest;
  interest.name = name;
  interest.lifetime_ms = static_cast<uint32_t>(params_.pit_lifetime_s * 1000);
  interest.sign(rak_current_->key,
                rak_locator(rak_current_->anchor_id, rak_current_->epoch));
  send_interest(interest);
}

void LaserNode::complete_onboarding(const ndn::Data& ack) {
  if (!verify_with_rak(ack.signed_portion(), ack.signature.value)) {
    log_drop("ack-bad-sig", ack.name);
    return;
  }
  pending_adverts_.erase(ack.name.encode());
  phase_ = Phase::Onboarded;
  onboarded_at_ns_ = now_ns();

  if (!routable_prefix_registered_) {
    fwd_.register_prefix(ndn::Name{anchor_id_, id_}, app_face_);
    routable_prefix_registered_ = true;
  }

  env_.log->append({now_ns(), sim::LogKind::Onboarded, env_.node_index,
                    env_.index_of ? env_.index_of(next_hop_id_) : -1,
                    my_hops_ ? *my_hops_ : 0, anchor_id_});
  if (env_.on_onboarded) {
    env_.on_onboarded(env_.node_index);
  }

  // Tell sleepy neighbors a path is now available.
  ndn::Interest wakeup;
  wakeup.name = ndn::Name{kWakeupComp};
  wakeup.lifetime_ms = 1000;
  send_interest(wakeup);
}

void LaserNode::restart_discovery() {
  transient_.reset();
  next_hop_addr_.reset();
  next_hop_id_.clear();
  my_hops_.reset();
  pending_adverts_.clear();
  ++auth_token_;
  begin_discovery(true);
}

void LaserNode::handle_discover(const ndn::Interest& interest) {
  auto req = DiscoveryRequest::parse(interest.name);
  if (!req || req->node_id == id_) {
    return;
  }
  if (phase_ != Phase::Onboarded || !rak_current_ || !my_hops_) {
    return;  // cannot relay without the cluster key
  }
  uint32_t mine = *my_hops_;
  bool closer = !req->hops || (mine + 1 < *req->hops);
  if (!closer) {
    return;  // no better than what the requester already has
  }

  // Stagger the response; every qualifying neighbor relays, and a
  // synchronized burst would collide at the requester.
  uint64_t jitter = s_to_ns(env_.rng->uniform(0.0, params_.relay_jitter_s));
  env_.queue->after(jitter, [this, req = *req, discover_name = interest.name]() {
    relay_onboarding_request(req, discover_name);
  });
}

void LaserNode::relay_onboarding_request(const DiscoveryRequest& req,
                                         const ndn::Name& discover_name) {
  if (phase_ != Phase::Onboarded || !rak_current_ || !my_hops_) {
    return;
  }
  OnboardingRequest onboard;
  onboard.manager_id = manager_id_;
  onboard.node_id = req.node_id;
  onboard.node_nonce = req.node_nonce;
  onboard.relay_addr = addr_;
  onboard.relay_hops = *my_hops_;
  onboard.anchor_id = anchor_id_;
  ndn::Name name = onboard.to_name();

  pending_remaps_[name.encode()] = {discover_name,
                                    now_ns() + s_to_ns(params_.discover_pit_lifetime_s)};

  ndn::Interest out;
  out.name = name;
  out.lifetime_ms = static_cast<uint32_t>(params_.discover_pit_lifetime_s * 1000);
  out.sign(rak_current_->key,
           rak_locator(rak_current_->anchor_id, rak_current_->epoch));
  send_interest(out);
}

void LaserNode::handle_remapped_auth(const ndn::Data& data) {
  auto it = pending_remaps_.find(data.name.encode());
  if (it == pending_remaps_.end()) {
    return;
  }
  if (now_ns() > it->second.second) {
    pending_remaps_.erase(it);
    return;
  }
  ndn::Name discover_name = it->second.first;
  pending_remaps_.erase(it);

  // Republish under the original discovery name; the manager-signed
  // packet rides inside unchanged.
  ndn::Data out;
  out.name = discover_name;
  out.content = encode_relay_envelope(id_, data.encode());
  out.sign(rak_current_->key,
           rak_locator(rak_current_->anchor_id, rak_current_->epoch));
  publish_data(out);
}

void LaserNode::handle_set_next(const ndn::Interest& interest) {
  auto msg = SetNext::parse(interest.name);
  if (!msg || msg->upstream_id != id_) {
    return;
  }
  if (phase_ != Phase::Onboarded || !rak_current_) {
    return;
  }
  bool verified = interest.signature &&
                  verify_with_rak(interest.signed_portion(), interest.signature->value);
  if (!dfb_.install(msg->origin_id, msg->downstream_addr, verified)) {
    log_drop("set-next-bad-sig", interest.name);
    return;
  }

  ndn::Name upstream_name;
  if (anchor_) {
    SetPrefix notify;
    notify.manager_id = manager_id_;
    notify.node_id = msg->origin_id;
    notify.anchor_id = id_;
    upstream_name = notify.to_name();
  } else {
    SetNext up;
    up.upstream_id = next_hop_id_;
    up.origin_id = msg->origin_id;
    up.downstream_addr = addr_;
    upstream_name = up.to_name();
  }

  auto [it, inserted] = pending_adverts_.try_emplace(upstream_name.encode());
  PendingAdvert& pending = it->second;
  pending.downstream_name = interest.name;
  pending.origin_id = msg->origin_id;
  if (!inserted) {
    return;  // already propagating this advertisement; retry loop handles it
  }
  send_advert_interest(upstream_name, pending);
}

void LaserNode::handle_chain_ack(const ndn::Data& data) {
  auto it = pending_adverts_.find(data.name.encode());
  if (it == pending_adverts_.end()) {
    return;
  }
  if (!it->second.downstream_name) {
    complete_onboarding(data);
    return;
  }
  if (!verify_with_rak(data.signed_portion(), data.signature.value)) {
    log_drop("ack-bad-sig", data.name);
    return;
  }
  ndn::Name downstream = *it->second.downstream_name;
  pending_adverts_.erase(it);
  publish_ack(downstream);
}

void LaserNode::handle_wakeup() {
  if (anchor_ || phase_ == Phase::Onboarded || phase_ == Phase::Authenticating ||
      phase_ == Phase::Advertising) {
    return;
  }
  if (phase_ == Phase::Discovering && best_offer_) {
    return;  // already negotiating a path
  }
  if (wakeup_scheduled_) {
    return;
  }
  wakeup_scheduled_ = true;
  uint64_t jitter = s_to_ns(env_.rng->uniform(0.0, params_.wakeup_jitter_s));
  env_.queue->after(jitter, [this]() {
    wakeup_scheduled_ = false;
    if (phase_ == Phase::Idle) {
      started_ = true;
      begin_discovery(true);
    } else if (phase_ == Phase::Discovering && !best_offer_) {
      begin_discovery(false);
    }
  });
}

void LaserNode::handle_rak_notify(const ndn::Interest& interest) {
  auto msg = RakNotify::parse(interest.name);
  if (!msg || msg->node_id != id_ || !transient_) {
    return;
  }
  if (!interest.signature || !interest.verify(transient_->tak)) {
    log_drop("rak-notify-bad-sig", interest.name);
    return;
  }
  if (rak_current_ && msg->epoch <= rak_current_->epoch) {
    publish_ack(interest.name);  // duplicate notification
    return;
  }
  pending_rak_notify_ = interest.name;
  RakFetch fetch;
  fetch.manager_id = manager_id_;
  fetch.node_id = id_;
  fetch.epoch = msg->epoch;
  pending_rak_fetch_ = fetch.to_name();

  ndn::Interest out;
  out.name = *pending_rak_fetch_;
  out.lifetime_ms = static_cast<uint32_t>(params_.pit_lifetime_s * 1000);
  out.sign(transient_->tak,
           tak_locator(id_, best_offer_ ? best_offer_->node_nonce : crypto::Nonce16{},
                       best_offer_ ? best_offer_->manager_nonce : crypto::Nonce16{}));
  send_interest(out);
}

void LaserNode::handle_rak_fetch_reply(const ndn::Data& data) {
  if (!transient_ || !data.verify(transient_->tak)) {
    log_drop("rak-fetch-bad-sig", data.name);
    return;
  }
  auto plain = crypto::channel_open(transient_->tek, data.content);
  if (!plain) {
    return;
  }
  auto record = parse_rak_record(*plain);
  if (!record || record->anchor_id != anchor_id_) {
    return;
  }
  install_routing_key(*record, now_ns());
  if (pending_rak_notify_) {
    publish_ack(*pending_rak_notify_);
  }
  pending_rak_notify_.reset();
  pending_rak_fetch_.reset();
}

void LaserNode::answer_echo(const ndn::Interest& interest) {
  if (!rak_current_) {
    return;
  }
  ndn::Data reply;
  reply.name = interest.name;
  reply.content = encode_status(Status::Ok);
  reply.sign(rak_current_->key,
             rak_locator(rak_current_->anchor_id, rak_current_->epoch));
  publish_data(reply);
}

void LaserNode::install_routing_key(const crypto::RoutingAuthKey& rak, uint64_t now_ns) {
  if (rak_current_) {
    rak_previous_ = rak_current_;
    rak_previous_until_ns_ = now_ns + s_to_ns(params_.rak_grace_s);
  }
  rak_current_ = rak;
}

bool LaserNode::verify_with_rak(ByteView signed_portion, const crypto::Tag32& tag) const {
  if (rak_current_ && crypto::hmac_verify(rak_current_->key, signed_portion, tag)) {
    return true;
  }
  if (rak_previous_ && env_.queue->now_ns() < rak_previous_until_ns_ &&
      crypto::hmac_verify(rak_previous_->key, signed_portion, tag)) {
    return true;
  }
  return false;
}

void LaserNode::express_interest(const ndn::Name& name) {
  pending_probes_.insert(name.encode());
  ndn::Interest interest;
  interest.name = name;
  interest.lifetime_ms = static_cast<uint32_t>(params_.pit_lifetime_s * 1000);
  send_interest(interest);
}

bool LaserNode::probe_satisfied(const ndn::Name& name) const {
  return satisfied_probes_.count(name.encode()) > 0;
}

void LaserNode::on_interest(const ndn::Interest& interest) {
  const ndn::Name& name = interest.name;
  if (name.empty()) {
    return;
  }
  const std::string& head = name.at(0);
  if (head == kDiscoverComp) {
    handle_discover(interest);
    return;
  }
  if (head == kWakeupComp) {
    handle_wakeup();
    return;
  }
  if (head == id_ && name.size() >= 2) {
    const std::string& verb = name.at(1);
    if (verb == kSetNextComp) {
      handle_set_next(interest);
    } else if (verb == kRakNotifyComp) {
      handle_rak_notify(interest);
    } else if (verb == kEchoComp) {
      answer_echo(interest);
    } else {
      // an unregistered cluster member or a service this node does not
      // run; the pending entry upstream simply expires
      log_drop("no-handler", name);
    }
    return;
  }
  if (!anchor_ && head == anchor_id_ && name.size() >= 3 && name.at(1) == id_ &&
      name.at(2) == kEchoComp) {
    answer_echo(interest);
    return;
  }
}

void LaserNode::on_data(const ndn::Data& data) {
  Bytes key = data.name.encode();
  if (pending_probes_.count(key)) {
    pending_probes_.erase(key);
    satisfied_probes_.insert(key);
    return;
  }
  if (phase_ == Phase::Discovering && data.name == discover_name_) {
    handle_network_auth(data);
    return;
  }
  if (phase_ == Phase::Authenticating && data.name == auth_name_) {
    handle_key_delivery(data);
    return;
  }
  if (pending_adverts_.count(key)) {
    handle_chain_ack(data);
    return;
  }
  if (pending_remaps_.count(key)) {
    handle_remapped_auth(data);
    return;
  }
  if (pending_rak_fetch_ && data.name == *pending_rak_fetch_) {
    handle_rak_fetch_reply(data);
    return;
  }
}

void LaserNode::handle_packet(const Bytes& wire) {
  switch (ndn::packet_kind(wire)) {
    case ndn::PacketKind::Interest: {
      auto interest = ndn::Interest::decode(wire);
      if (interest) {
        on_interest(*interest);
      }
      break;
    }
    case ndn::PacketKind::Data: {
      auto data = ndn::Data::decode(wire);
      if (data) {
        on_data(*data);
      }
      break;
    }
    case ndn::PacketKind::Malformed:
      break;
  }
}

std::string LaserNode::state_digest() const {
  std::string out = "id=" + id_;
  out += " phase=" + std::to_string(static_cast<int>(phase_));
  out += " hops=" + hops_to_component(my_hops_);
  out += " next=" + (next_hop_addr_ ? next_hop_addr_->to_hex() : std::string("-"));
  out += " next_id=" + (next_hop_id_.empty() ? std::string("-") : next_hop_id_);
  out += " anchor=" + (anchor_id_.empty() ? std::string("-") : anchor_id_);
  out += " rak=" + (rak_current_ ? std::to_string(rak_current_->epoch) : std::string("-"));
  out += " dfb={";
  for (const auto& [node, hop] : dfb_.entries()) {
    out += node + ">" + hop.to_hex() + ",";
  }
  out += "}";
  return out;
}

}  // namespace laser::proto
