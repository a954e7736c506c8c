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

#include "laser/island.hpp"

namespace laser::proto {

Island::Island(IslandConfig config, uint64_t seed)
    : config_(config), rng_(seed) {
  if (config_.medium == IslandConfig::MediumKind::Radio) {
    medium_ = std::make_unique<sim::RadioMedium>(queue_, rng_, log_, config_.radio);
  } else {
    medium_ = std::make_unique<sim::IdealMedium>(queue_, log_, config_.radio.frame_overhead,
                                                 config_.ideal_link_delay_ns);
  }
}

Island::~Island() = default;

HostEnv Island::make_env(int index) {
  HostEnv env;
  env.queue = &queue_;
  env.rng = &rng_;
  env.log = &log_;
  env.node_index = index;
  env.index_of = [this](const std::string& id) { return index_of(id); };
  env.on_onboarded = [this](int idx) {
    // re-onboarding after a restart must not count twice
    if (!ever_onboarded_[idx]) {
      ever_onboarded_[idx] = true;
      ++onboarded_;
    }
  };
  return env;
}

int Island::add_host(const std::string& node_id, sim::Position pos, bool is_anchor,
                     const std::string& manager_id, double start_s) {
  int index = static_cast<int>(hosts_.size());
  auto host = std::make_unique<Host>();

  host->forwarder = std::make_unique<ndn::Forwarder>([this]() { return queue_.now_ns(); });
  ndn::Forwarder* fwd = host->forwarder.get();
  fwd->on_interest_forwarded = [this, index](const ndn::Interest& interest,
                                             const std::vector<ndn::HopTarget>&) {
    log_.append({queue_.now_ns(), sim::LogKind::InterestForward, index, -1, 0,
                 interest.name.to_uri()});
  };

  LinkAddr addr = LinkAddr::from_index(static_cast<uint32_t>(index));
  host->link = std::make_unique<sim::LinkLayer>(
      *medium_, queue_, addr, config_.radio.mtu_payload,
      sim::seconds_to_ns(config_.reassembly_timeout_s), &log_, index);
  host->link->attach(pos);

  // Wireless face: forwarder output goes through the link layer.
  sim::LinkLayer* link = host->link.get();
  ndn::FaceId wireless = fwd->add_face(
      ndn::FaceKind::Wireless,
      [link](const Bytes& packet, const std::optional<LinkAddr>& dst) {
        link->send_packet(packet, dst.value_or(LinkAddr::broadcast()));
      });

  host->app = std::make_unique<LaserNode>(node_id, addr, config_.protocol,
                                          make_env(index), *fwd);
  LaserNode* app = host->app.get();
  link->on_packet = [fwd, wireless, app](const LinkAddr& src, const Bytes& packet) {
    if (app->started()) {  // powered-off radios hear nothing
      fwd->receive(wireless, src, packet);
    }
  };

  hosts_.push_back(std::move(host));
  positions_.push_back(pos);
  start_s_.push_back(start_s);
  ever_onboarded_.push_back(false);
  index_by_id_[node_id] = index;

  if (is_anchor) {
    anchor_index_ = index;
    im_ = std::make_unique<ImNode>(manager_id, config_.protocol, make_env(index), *fwd);
    crypto::RoutingAuthKey rak = im_->register_anchor(node_id);
    app->make_anchor(manager_id, rak);
    im_->on_anchor_key_update = [this, index](const crypto::RoutingAuthKey& rak) {
      hosts_[index]->app->install_routing_key(rak, queue_.now_ns());
    };
  } else {
    ++sn_count_;
    crypto::PresharedKey pin{rng_.bytes(16)};
    app->set_preshared(pin);
    im_->provision(node_id, pin);
    queue_.at(sim::seconds_to_ns(start_s), [app]() { app->start(); });
  }
  return index;
}

int Island::add_anchor(const std::string& anchor_id, const std::string& manager_id,
                       sim::Position pos) {
  return add_host(anchor_id, pos, true, manager_id, 0.0);
}

int Island::add_node(const std::string& node_id, sim::Position pos, double start_s) {
  return add_host(node_id, pos, false, {}, start_s);
}

void Island::add_link(int a, int b) {
  auto* ideal = dynamic_cast<sim::IdealMedium*>(medium_.get());
  if (ideal == nullptr) {
    throw std::logic_error("add_link requires the ideal medium");
  }
  ideal->add_link(a, b);
}

void Island::run() {
  uint64_t t_max = sim::seconds_to_ns(config_.t_max_s);
  while (!queue_.empty() && queue_.next_time_ns() <= t_max && !all_onboarded()) {
    queue_.run_one();
  }
}

void Island::run_for(double seconds) {
  uint64_t until = queue_.now_ns() + sim::seconds_to_ns(seconds);
  while (!queue_.empty() && queue_.next_time_ns() <= until) {
    queue_.run_one();
  }
}

int Island::index_of(const std::string& node_id) const {
  auto it = index_by_id_.find(node_id);
  return it == index_by_id_.end() ? -1 : it->second;
}

void Island::send_probe(int src, const ndn::Name& name) {
  hosts_[src]->app->express_interest(name);
}

bool Island::probe_satisfied(int src, const ndn::Name& name) const {
  return hosts_[src]->app->probe_satisfied(name);
}

void Island::inject_packet(int dst, const LinkAddr& fake_src, const Bytes& packet,
                           double delay_s) {
  auto frags = sim::fragment_packet(inject_message_id_++, packet,
                                    config_.radio.mtu_payload - sim::kFragmentHeaderSize);
  uint64_t delay = sim::seconds_to_ns(delay_s);
  for (Bytes& frag : frags) {
    medium_->inject(dst, sim::Frame{fake_src, LinkAddr::broadcast(), std::move(frag)},
                    delay);
  }
}

std::string Island::state_digest() const {
  std::string out;
  for (const auto& host : hosts_) {
    out += host->app->state_digest();
    out += '\n';
  }
  if (im_) {
    out += im_->state_digest();
    out += '\n';
  }
  return out;
}

}  // namespace laser::proto
