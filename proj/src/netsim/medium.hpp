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

#include <deque>
#include <set>

#include "netsim/event_queue.hpp"
#include "netsim/metrics.hpp"
#include "netsim/rng.hpp"
#include "util/linkaddr.hpp"

namespace laser::sim {

struct Frame {
  LinkAddr src;
  LinkAddr dst;  // unicast address or LinkAddr::broadcast()
  Bytes payload;
};

// Receives frames the medium decides to deliver. MAC-level destination
// filtering is the station's job; the medium models reachability and loss.
class Station {
 public:
  virtual ~Station() = default;
  virtual void deliver_frame(const Frame& frame) = 0;
};

struct Position {
  double x = 0;
  double y = 0;
};

class Medium {
 public:
  virtual ~Medium() = default;

  // Station ids are assigned in attach order.
  virtual int attach(Station* station, const Position& pos) = 0;
  virtual void transmit(int station, Frame frame) = 0;

  // Test hook: delivers a crafted frame to one station after `delay_ns`,
  // bypassing any attached transmitter.
  virtual void inject(int dst_station, Frame frame, uint64_t delay_ns) = 0;
};

struct RadioParams {
  double ref_loss_db = 40.0;        // at 1 m
  double path_loss_exponent = 3.0;
  double tx_power_dbm = 0.0;
  double rx_sensitivity_dbm = -85.0;
  uint64_t bitrate_bps = 250000;
  size_t mtu_payload = 102;     // frame payload budget (adaptation header + chunk)
  size_t frame_overhead = 25;   // PHY + MAC octets per frame

  double rx_power_dbm(double distance_m) const;
  bool reachable(double distance_m) const {
    return rx_power_dbm(distance_m) >= rx_sensitivity_dbm;
  }
  uint64_t air_time_ns(size_t payload_octets) const {
    return (frame_overhead + payload_octets) * 8ull * 1000000000ull / bitrate_bps;
  }
};

// Log-distance path loss radio with slotted CSMA/CA and a binary collision
// rule: two overlapping transmissions both audible at a receiver destroy
// each other there. Unacknowledged MAC; no capture effect.
class RadioMedium : public Medium {
 public:
  RadioMedium(EventQueue& queue, Rng& rng, MetricsLog& log, RadioParams params);

  int attach(Station* station, const Position& pos) override;
  void transmit(int station, Frame frame) override;
  void inject(int dst_station, Frame frame, uint64_t delay_ns) override;

  double distance(int a, int b) const;
  const RadioParams& params() const { return params_; }

  uint64_t csma_drops() const { return csma_drops_; }

  static constexpr uint64_t kSlotNs = 320000;  // 20 symbols at 62.5 ksym/s
  static constexpr int kMacMinBe = 3;
  static constexpr int kMacMaxBe = 5;
  static constexpr int kMaxBackoffAttempts = 5;

 private:
  struct Transmission {
    int station;
    uint64_t start_ns;
    uint64_t end_ns;
    Frame frame;
  };
  struct TxState {
    std::deque<Frame> queue;
    bool busy = false;
    int backoff_attempts = 0;
    int backoff_exponent = kMacMinBe;
  };

  void start_backoff(int station);
  void clear_channel_assessment(int station);
  void begin_air(int station);
  bool channel_busy(int station, uint64_t t_ns) const;
  bool collided(int receiver, size_t tx_index) const;
  void deliver_if_clean(int receiver, size_t tx_index);
  void prune_old_transmissions();

  EventQueue& queue_;
  Rng& rng_;
  MetricsLog& log_;
  RadioParams params_;

  std::vector<Station*> stations_;
  std::vector<Position> positions_;
  std::vector<TxState> tx_;
  std::vector<Transmission> airlog_;
  uint64_t csma_drops_ = 0;
};

// Lossless medium over an explicit adjacency graph: frames arrive at every
// neighbor after a fixed delay. Used for protocol-level runs where the
// radio channel is out of scope.
class IdealMedium : public Medium {
 public:
  IdealMedium(EventQueue& queue, MetricsLog& log, size_t frame_overhead = 25,
              uint64_t delay_ns = 1000000);

  int attach(Station* station, const Position& pos) override;
  void transmit(int station, Frame frame) override;
  void inject(int dst_station, Frame frame, uint64_t delay_ns) override;

  void add_link(int a, int b);
  bool linked(int a, int b) const;

 private:
  EventQueue& queue_;
  MetricsLog& log_;
  size_t frame_overhead_;
  uint64_t delay_ns_;
  std::vector<Station*> stations_;
  std::set<std::pair<int, int>> links_;
};

}  // namespace laser::sim
