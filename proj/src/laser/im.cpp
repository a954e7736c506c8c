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

#include "laser/im.hpp"

namespace laser::proto {

ImNode::ImNode(std::string id, Params params, HostEnv env, ndn::Forwarder& forwarder)
    : id_(std::move(id)), params_(params), env_(std::move(env)), fwd_(forwarder) {
  app_face_ = fwd_.add_face(ndn::FaceKind::App,
                            [this](const Bytes& wire, const std::optional<LinkAddr>&) {
                              handle_packet(wire);
                            });
  fwd_.register_prefix(ndn::Name{id_}, app_face_);
}

void ImNode::provision(const std::string& node_id, crypto::PresharedKey pin) {
  pins_[node_id] = std::move(pin);
  long_lived_cache_.erase(node_id);

  // Answer any onboarding requests held for this node.
  std::vector<Bytes> ready;
  for (auto it = parked_.begin(); it != parked_.end();) {
    auto interest = ndn::Interest::decode(it->first);
    auto req = interest ? OnboardingRequest::parse(interest->name)
                        : std::optional<OnboardingRequest>{};
    if (req && req->node_id == node_id && now_ns() < it->second) {
      ready.push_back(it->first);
      it = parked_.erase(it);
    } else {
      ++it;
    }
  }
  for (const Bytes& wire : ready) {
    auto interest = ndn::Interest::decode(wire);
    if (interest) {
      handle_onboarding(*interest, wire);
    }
  }
}

crypto::RoutingAuthKey ImNode::register_anchor(const std::string& anchor_id) {
  crypto::RoutingAuthKey rak;
  rak.key = env_.rng->key128();
  rak.anchor_id = anchor_id;
  rak.epoch = 1;
  anchors_[anchor_id] = AnchorKeys{rak, std::nullopt, 0};
  return rak;
}

const crypto::RoutingAuthKey& ImNode::rak_of(const std::string& anchor_id) const {
  return anchors_.at(anchor_id).current;
}

const crypto::LongLivedKeys& ImNode::long_lived_for(const std::string& node_id) {
  auto it = long_lived_cache_.find(node_id);
  if (it == long_lived_cache_.end()) {
    it = long_lived_cache_
             .emplace(node_id, crypto::derive_long_lived(pins_.at(node_id), node_id,
                                                         params_.kdf_iterations))
             .first;
  }
  return it->second;
}

ImNode::Session* ImNode::live_session(const std::string& node_id) {
  auto it = sessions_.find(node_id);
  if (it == sessions_.end()) {
    return nullptr;
  }
  if (it->second.expires_ns != 0 && now_ns() >= it->second.expires_ns) {
    return nullptr;
  }
  return &it->second;
}

bool ImNode::verify_anchor_signed(const std::string& anchor_id, ByteView signed_portion,
                                  const std::optional<ndn::SignatureInfo>& sig) const {
  if (!sig) {
    return false;
  }
  auto it = anchors_.find(anchor_id);
  if (it == anchors_.end()) {
    return false;
  }
  const AnchorKeys& keys = it->second;
  if (crypto::hmac_verify(keys.current.key, signed_portion, sig->value)) {
    return true;
  }
  if (keys.previous && now_ns() < keys.previous_until_ns &&
      crypto::hmac_verify(keys.previous->key, signed_portion, sig->value)) {
    return true;
  }
  return false;
}

void ImNode::publish(ndn::Data& data) { fwd_.receive(app_face_, std::nullopt, data.encode()); }

void ImNode::send_interest(ndn::Interest& interest) {
  interest.nonce = env_.rng->next_u32();
  fwd_.receive(app_face_, std::nullopt, interest.encode());
}

void ImNode::log_exchange(sim::LogKind kind, const std::string& subject, const char* verb) {
  env_.log->append({now_ns(), kind, env_.node_index,
                    env_.index_of ? env_.index_of(subject) : -1, 0, verb});
}

void ImNode::log_drop(const char* reason, const ndn::Name& name) {
  env_.log->append({now_ns(), sim::LogKind::PacketDrop, env_.node_index, -1, 0,
                    std::string(reason) + " " + name.to_uri()});
}

void ImNode::handle_onboarding(const ndn::Interest& interest, ByteView wire) {
  auto req = OnboardingRequest::parse(interest.name);
  if (!req || req->manager_id != id_) {
    return;
  }
  // The relay vouches for the request with its cluster key; anything
  // unverifiable is unauthenticated network input and dropped silently.
  if (!verify_anchor_signed(req->anchor_id, interest.signed_portion(),
                            interest.signature)) {
    log_drop("onboard-bad-sig", interest.name);
    return;
  }
  log_exchange(sim::LogKind::ImRequest, req->node_id, "onboard");

  if (!pins_.count(req->node_id)) {
    // Unknown device: hold the request until its secret is provisioned.
    parked_.emplace_back(Bytes(wire.begin(), wire.end()),
                         now_ns() + uint64_t(interest.lifetime_ms) * 1000000ull);
    return;
  }

  const crypto::LongLivedKeys& keys = long_lived_for(req->node_id);
  Session* session = live_session(req->node_id);
  if (session == nullptr || session->node_nonce != req->node_nonce) {
    // Fresh handshake (or a new discovery round): new manager nonce and
    // transient keys. A node has at most one live session.
    Session fresh;
    fresh.node_nonce = req->node_nonce;
    fresh.manager_nonce = env_.rng->nonce16();
    fresh.keys = crypto::derive_transient(keys.kdk, fresh.node_nonce,
                                          fresh.manager_nonce, params_.kdf_iterations);
    fresh.expires_ns = params_.session_lifetime_s > 0
                           ? now_ns() + sim::seconds_to_ns(params_.session_lifetime_s)
                           : 0;
    sessions_[req->node_id] = fresh;
    session = &sessions_[req->node_id];
  }
  session->anchor_id = req->anchor_id;

  NetworkAuthPayload payload;
  payload.node_id = req->node_id;
  payload.node_nonce = req->node_nonce;
  payload.manager_id = id_;
  payload.manager_nonce = session->manager_nonce;
  payload.relay_addr = req->relay_addr;
  payload.relay_hops = req->relay_hops;
  payload.anchor_id = req->anchor_id;

  ndn::Data na;
  na.name = interest.name;
  na.content = payload.encode();
  na.sign(keys.ak, ak_locator(req->node_id));
  publish(na);
  log_exchange(sim::LogKind::ImResponse, req->node_id, "network-auth");
}

void ImNode::handle_auth(const ndn::Interest& interest) {
  auto req = AuthRequest::parse(interest.name);
  if (!req || req->manager_id != id_) {
    return;
  }
  log_exchange(sim::LogKind::ImRequest, req->node_id, "auth");

  Session* session = live_session(req->node_id);
  if (session == nullptr || session->node_nonce != req->node_nonce ||
      session->manager_nonce != req->manager_nonce) {
    // Stale nonces: a replay or an out-of-date handshake.
    log_drop("auth-nonce-mismatch", interest.name);
    return;
  }
  if (!interest.signature || !interest.verify(session->keys.tak)) {
    log_drop("auth-bad-sig", interest.name);
    return;
  }
  auto anchor = anchors_.find(req->anchor_id);
  if (anchor == anchors_.end()) {
    log_drop("auth-unknown-anchor", interest.name);
    return;
  }
  session->anchor_id = req->anchor_id;
  session->authenticated = true;

  ndn::Data delivery =
      make_key_delivery(interest.name, *session, anchor->second.current, req->node_id);
  publish(delivery);
  log_exchange(sim::LogKind::ImResponse, req->node_id, "key-delivery");
}

ndn::Data ImNode::make_key_delivery(const ndn::Name& name, const Session& session,
                                    const crypto::RoutingAuthKey& rak,
                                    const std::string& node_id) {
  ndn::Data data;
  data.name = name;
  data.content =
      crypto::channel_seal(session.keys.tek, encode_rak_record(rak), env_.rng->block16());
  data.sign(session.keys.tak,
            tak_locator(node_id, session.node_nonce, session.manager_nonce));
  return data;
}

void ImNode::handle_set_prefix(const ndn::Interest& interest) {
  auto req = SetPrefix::parse(interest.name);
  if (!req || req->manager_id != id_) {
    return;
  }
  if (!verify_anchor_signed(req->anchor_id, interest.signed_portion(),
                            interest.signature)) {
    log_drop("set-prefix-bad-sig", interest.name);
    return;
  }
  log_exchange(sim::LogKind::ImRequest, req->node_id, "set-prefix");
  registered_[req->node_id] = req->anchor_id;

  ndn::Data ack;
  ack.name = interest.name;
  ack.content = encode_status(Status::Ok);
  const crypto::RoutingAuthKey& rak = anchors_.at(req->anchor_id).current;
  ack.sign(rak.key, rak_locator(rak.anchor_id, rak.epoch));
  publish(ack);
  log_exchange(sim::LogKind::ImResponse, req->node_id, "ack");
}

void ImNode::handle_get_prefix(const ndn::Interest& interest) {
  auto req = PrefixQuery::parse(interest.name);
  if (!req || req->manager_id != id_) {
    return;
  }
  log_exchange(sim::LogKind::ImRequest, req->node_id, "get-prefix");

  ndn::Data reply;
  reply.name = interest.name;
  std::string anchor_for_signing;
  auto it = registered_.find(req->node_id);
  if (it != registered_.end()) {
    reply.content = encode_prefix_payload(ndn::Name{it->second, req->node_id});
    anchor_for_signing = it->second;
  } else {
    reply.content = encode_status(Status::NotFound);
    // No anchor association to speak for; sign under any hosted cluster key.
    if (!anchors_.empty()) {
      anchor_for_signing = anchors_.begin()->first;
    }
  }
  if (anchor_for_signing.empty()) {
    return;
  }
  const crypto::RoutingAuthKey& rak = anchors_.at(anchor_for_signing).current;
  reply.sign(rak.key, rak_locator(rak.anchor_id, rak.epoch));
  publish(reply);
  log_exchange(sim::LogKind::ImResponse, req->node_id, "prefix");
}

void ImNode::handle_rak_fetch(const ndn::Interest& interest) {
  auto req = RakFetch::parse(interest.name);
  if (!req || req->manager_id != id_) {
    return;
  }
  Session* session = live_session(req->node_id);
  if (session == nullptr || !session->authenticated) {
    log_drop("rak-fetch-no-session", interest.name);
    return;
  }
  if (!interest.signature || !interest.verify(session->keys.tak)) {
    log_drop("rak-fetch-bad-sig", interest.name);
    return;
  }
  auto anchor = anchors_.find(session->anchor_id);
  if (anchor == anchors_.end() || anchor->second.current.epoch != req->epoch) {
    log_drop("rak-fetch-wrong-epoch", interest.name);
    return;
  }
  ndn::Data delivery = make_key_delivery(interest.name, *session,
                                         anchor->second.current, req->node_id);
  publish(delivery);
  log_exchange(sim::LogKind::ImResponse, req->node_id, "key-refresh");
}

ImNode::RefreshResult ImNode::refresh_rak(const std::string& anchor_id) {
  AnchorKeys& keys = anchors_.at(anchor_id);
  keys.previous = keys.current;
  keys.previous_until_ns = now_ns() + sim::seconds_to_ns(params_.rak_grace_s);
  keys.current.key = env_.rng->key128();
  keys.current.epoch += 1;

  if (on_anchor_key_update) {
    on_anchor_key_update(keys.current);
  }

  RefreshResult result;
  result.new_key = keys.current;
  std::vector<std::string> to_drop;
  for (const auto& [node_id, anchor] : registered_) {
    if (anchor != anchor_id) {
      continue;
    }
    Session* session = live_session(node_id);
    if (session == nullptr || !session->authenticated) {
      result.excluded.push_back(node_id);
      to_drop.push_back(node_id);
      continue;
    }
    RakNotify notify;
    notify.node_id = node_id;
    notify.epoch = keys.current.epoch;
    ndn::Interest interest;
    interest.name = notify.to_name();
    interest.lifetime_ms = static_cast<uint32_t>(params_.pit_lifetime_s * 1000);
    interest.sign(session->keys.tak,
                  tak_locator(node_id, session->node_nonce, session->manager_nonce));
    send_interest(interest);
    result.notified.push_back(node_id);
  }
  for (const std::string& node_id : to_drop) {
    // Lapsed members must onboard again before they can route.
    registered_.erase(node_id);
    sessions_.erase(node_id);
  }
  return result;
}

std::vector<ndn::Data> ImNode::build_rak_push(const std::string& anchor_id) {
  std::vector<ndn::Data> out;
  const AnchorKeys& keys = anchors_.at(anchor_id);
  for (const auto& [node_id, anchor] : registered_) {
    if (anchor != anchor_id) {
      continue;
    }
    Session* session = live_session(node_id);
    if (session == nullptr || !session->authenticated) {
      continue;
    }
    RakFetch fetch;
    fetch.manager_id = id_;
    fetch.node_id = node_id;
    fetch.epoch = keys.current.epoch;
    out.push_back(
        make_key_delivery(fetch.to_name(), *session, keys.current, node_id));
  }
  return out;
}

std::optional<ndn::Name> ImNode::registered_prefix(const std::string& node_id) const {
  auto it = registered_.find(node_id);
  if (it == registered_.end()) {
    return std::nullopt;
  }
  return ndn::Name{it->second, node_id};
}

std::optional<ImNode::SessionView> ImNode::session(const std::string& node_id) const {
  auto it = sessions_.find(node_id);
  if (it == sessions_.end()) {
    return std::nullopt;
  }
  return SessionView{it->second.node_nonce, it->second.manager_nonce,
                     it->second.anchor_id, it->second.authenticated};
}

void ImNode::expire_session(const std::string& node_id) { sessions_.erase(node_id); }

void ImNode::on_interest(const ndn::Interest& interest, ByteView wire) {
  const ndn::Name& name = interest.name;
  if (name.size() < 2 || name.at(0) != id_) {
    return;
  }
  const std::string& verb = name.at(1);
  if (verb == kOnboardComp) {
    handle_onboarding(interest, wire);
  } else if (verb == kAuthComp) {
    handle_auth(interest);
  } else if (verb == kSetPrefixComp) {
    handle_set_prefix(interest);
  } else if (verb == kGetPrefixComp) {
    handle_get_prefix(interest);
  } else if (verb == kRakFetchComp) {
    handle_rak_fetch(interest);
  }
}

void ImNode::handle_packet(const Bytes& wire) {
  if (ndn::packet_kind(wire) != ndn::PacketKind::Interest) {
    return;  // the manager only consumes requests
  }
  auto interest = ndn::Interest::decode(wire);
  if (interest) {
    on_interest(*interest, wire);
  }
}

std::string ImNode::state_digest() const {
  std::string out = "im=" + id_;
  out += " sessions={";
  for (const auto& [node, s] : sessions_) {
    out += node + ":" + hex_encode(s.node_nonce) + "/" + hex_encode(s.manager_nonce) +
           (s.authenticated ? "!" : "?") + s.anchor_id + ",";
  }
  out += "} registered={";
  for (const auto& [node, anchor] : registered_) {
    out += node + ">" + anchor + ",";
  }
  out += "} raks={";
  for (const auto& [anchor, keys] : anchors_) {
    out += anchor + ":" + std::to_string(keys.current.epoch) + ",";
  }
  out += "}";
  return out;
}

}  // namespace laser::proto
