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

#include <memory>

#include "laser/im.hpp"
#include "laser/node.hpp"
#include "netsim/link_layer.hpp"

namespace laser::proto {

// One simulated island: an anchor hosting the manager plus standard
// nodes, wired through forwarders and a shared medium. This is the
// execution harness used by scenario runs and protocol tests alike.
struct IslandConfig {
  enum class MediumKind { Radio, Ideal };

  sim::RadioParams radio;
  Params protocol;
  double t_max_s = 1200.0;
  MediumKind medium = MediumKind::Radio;
  uint64_t ideal_link_delay_ns = 1000000;  // 1 ms
  double reassembly_timeout_s = 2.0;
};

class Island {
 public:
  Island(IslandConfig config, uint64_t seed);
  ~Island();

  // The anchor hosts the island manager; create it first.
  int add_anchor(const std::string& anchor_id, const std::string& manager_id,
                 sim::Position pos = {});
  int add_node(const std::string& node_id, sim::Position pos, double start_s);

  // Ideal medium only: connectivity graph edges.
  void add_link(int a, int b);

  // Runs until every standard node is onboarded, the event queue drains,
  // or simulated time passes t_max.
  void run();
  // Advances simulated time by the given amount (events permitting).
  void run_for(double seconds);

  bool all_onboarded() const { return onboarded_ >= sn_count_; }
  size_t onboarded_count() const { return onboarded_; }
  size_t sn_count() const { return sn_count_; }
  size_t node_count() const { return hosts_.size(); }

  LaserNode& node(int index) { return *hosts_[index]->app; }
  const LaserNode& node(int index) const { return *hosts_[index]->app; }
  ndn::Forwarder& forwarder(int index) { return *hosts_[index]->forwarder; }
  ImNode& im() { return *im_; }
  int anchor_index() const { return anchor_index_; }

  sim::EventQueue& queue() { return queue_; }
  sim::Rng& rng() { return rng_; }
  sim::MetricsLog& log() { return log_; }
  const sim::MetricsLog& log() const { return log_; }

  int index_of(const std::string& node_id) const;
  sim::Position position_of(int index) const { return positions_[index]; }
  double start_time_s(int index) const { return start_s_[index]; }

  // -- application probes --
  void send_probe(int src, const ndn::Name& name);
  bool probe_satisfied(int src, const ndn::Name& name) const;

  // -- adversarial injection --
  void inject_packet(int dst, const LinkAddr& fake_src, const Bytes& packet,
                     double delay_s = 0.0);

  std::string state_digest() const;

 private:
  struct Host {
    std::unique_ptr<ndn::Forwarder> forwarder;
    std::unique_ptr<sim::LinkLayer> link;
    std::unique_ptr<LaserNode> app;
  };

  int add_host(const std::string& node_id, sim::Position pos, bool is_anchor,
               const std::string& manager_id, double start_s);
  HostEnv make_env(int index);

  IslandConfig config_;
  sim::EventQueue queue_;
  sim::Rng rng_;
  sim::MetricsLog log_;
  std::unique_ptr<sim::Medium> medium_;

  std::vector<std::unique_ptr<Host>> hosts_;
  std::vector<sim::Position> positions_;
  std::vector<double> start_s_;
  std::vector<bool> ever_onboarded_;
  std::map<std::string, int> index_by_id_;
  std::unique_ptr<ImNode> im_;
  int anchor_index_ = -1;
  size_t sn_count_ = 0;
  size_t onboarded_ = 0;
  uint16_t inject_message_id_ = 0xff00;
};

}  // namespace laser::proto
