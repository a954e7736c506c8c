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

#include "netsim/medium.hpp"

#include <cmath>

namespace laser::sim {

namespace {
constexpr double kSpeedOfLight = 299792458.0;
constexpr double kMinDistanceM = 0.1;  // clamp so self-reception stays audible

uint64_t propagation_ns(double distance_m) {
  return static_cast<uint64_t>(distance_m / kSpeedOfLight * 1e9);
}
}  // namespace

double RadioParams::rx_power_dbm(double distance_m) const {
  double d = std::max(distance_m, kMinDistanceM);
  return tx_power_dbm - ref_loss_db - 10.0 * path_loss_exponent * std::log10(d);
}

RadioMedium::RadioMedium(EventQueue& queue, Rng& rng, MetricsLog& log, RadioParams params)
    : queue_(queue), rng_(rng), log_(log), params_(params) {}

int RadioMedium::attach(Station* station, const Position& pos) {
  stations_.push_back(station);
  positions_.push_back(pos);
  tx_.emplace_back();
  return static_cast<int>(stations_.size() - 1);
}

double RadioMedium::distance(int a, int b) const {
  double dx = positions_[a].x - positions_[b].x;
  double dy = positions_[a].y - positions_[b].y;
  return std::sqrt(dx * dx + dy * dy);
}

void RadioMedium::transmit(int station, Frame frame) {
  if (frame.payload.size() > params_.mtu_payload) {
    throw std::invalid_argument("frame exceeds link MTU");
  }
  TxState& st = tx_[station];
  st.queue.push_back(std::move(frame));
  if (!st.busy) {
    st.busy = true;
    st.backoff_attempts = 0;
    st.backoff_exponent = kMacMinBe;
    start_backoff(station);
  }
}

void RadioMedium::inject(int dst_station, Frame frame, uint64_t delay_ns) {
  queue_.after(delay_ns, [this, dst_station, frame = std::move(frame)]() {
    stations_[dst_station]->deliver_frame(frame);
  });
}

void RadioMedium::start_backoff(int station) {
  TxState& st = tx_[station];
  uint32_t slots = rng_.below(1u << st.backoff_exponent);
  uint64_t slot_edge = ((queue_.now_ns() / kSlotNs) + 1 + slots) * kSlotNs;
  queue_.at(slot_edge, [this, station]() { clear_channel_assessment(station); });
}

bool RadioMedium::channel_busy(int station, uint64_t t_ns) const {
  for (const Transmission& t : airlog_) {
    // A transmission starting exactly now is invisible to CCA; that is
    // the slotted-CSMA vulnerability window that produces collisions.
    if (t.start_ns < t_ns && t_ns < t.end_ns &&
        params_.reachable(distance(t.station, station))) {
      return true;
    }
  }
  return false;
}

void RadioMedium::clear_channel_assessment(int station) {
  TxState& st = tx_[station];
  if (st.queue.empty()) {
    st.busy = false;
    return;
  }
  if (channel_busy(station, queue_.now_ns())) {
    ++st.backoff_attempts;
    st.backoff_exponent = std::min(st.backoff_exponent + 1, kMacMaxBe);
    if (st.backoff_attempts >= kMaxBackoffAttempts) {
      // Channel access failure: abandon this frame.
      ++csma_drops_;
      log_.append({queue_.now_ns(), LogKind::CsmaDrop, station, -1,
                   params_.frame_overhead + st.queue.front().payload.size(), {}});
      st.queue.pop_front();
      st.backoff_attempts = 0;
      st.backoff_exponent = kMacMinBe;
      if (st.queue.empty()) {
        st.busy = false;
        return;
      }
    }
    start_backoff(station);
    return;
  }
  begin_air(station);
}

void RadioMedium::begin_air(int station) {
  TxState& st = tx_[station];
  Frame frame = std::move(st.queue.front());
  st.queue.pop_front();

  uint64_t now = queue_.now_ns();
  uint64_t duration = params_.air_time_ns(frame.payload.size());
  size_t air_octets = params_.frame_overhead + frame.payload.size();

  prune_old_transmissions();
  airlog_.push_back({station, now, now + duration, std::move(frame)});
  size_t tx_index = airlog_.size() - 1;
  log_.append({now, LogKind::FrameTx, station, -1, air_octets, {}});

  for (int r = 0; r < static_cast<int>(stations_.size()); ++r) {
    if (r == station) {
      continue;
    }
    double d = distance(station, r);
    if (!params_.reachable(d)) {
      continue;  // below sensitivity: no delivery event at all
    }
    uint64_t tx_start = airlog_[tx_index].start_ns;
    queue_.at(now + duration + propagation_ns(d), [this, r, tx_start, station]() {
      // Re-find the transmission; the airlog may have been compacted.
      for (size_t i = 0; i < airlog_.size(); ++i) {
        if (airlog_[i].station == station && airlog_[i].start_ns == tx_start) {
          deliver_if_clean(r, i);
          return;
        }
      }
    });
  }

  queue_.at(now + duration, [this, station]() {
    TxState& s = tx_[station];
    s.backoff_attempts = 0;
    s.backoff_exponent = kMacMinBe;
    if (s.queue.empty()) {
      s.busy = false;
    } else {
      start_backoff(station);
    }
  });
}

bool RadioMedium::collided(int receiver, size_t tx_index) const {
  const Transmission& tx = airlog_[tx_index];
  for (size_t i = 0; i < airlog_.size(); ++i) {
    if (i == tx_index) {
      continue;
    }
    const Transmission& other = airlog_[i];
    bool overlap = other.start_ns < tx.end_ns && tx.start_ns < other.end_ns;
    if (!overlap) {
      continue;
    }
    // Both audible at the receiver: binary collision, both lost there.
    // The receiver's own transmissions also land here (half duplex).
    double d = other.station == receiver ? 0.0 : distance(other.station, receiver);
    if (params_.reachable(d)) {
      return true;
    }
  }
  return false;
}

void RadioMedium::deliver_if_clean(int receiver, size_t tx_index) {
  if (collided(receiver, tx_index)) {
    return;
  }
  stations_[receiver]->deliver_frame(airlog_[tx_index].frame);
}

void RadioMedium::prune_old_transmissions() {
  // Anything that ended long before the longest possible frame plus
  // propagation cannot affect pending CCA or delivery checks.
  uint64_t horizon = params_.air_time_ns(params_.mtu_payload) * 4 + 1000000;
  uint64_t now = queue_.now_ns();
  if (now < horizon) {
    return;
  }
  uint64_t cutoff = now - horizon;
  std::erase_if(airlog_, [cutoff](const Transmission& t) { return t.end_ns < cutoff; });
}

IdealMedium::IdealMedium(EventQueue& queue, MetricsLog& log, size_t frame_overhead,
                         uint64_t delay_ns)
    : queue_(queue), log_(log), frame_overhead_(frame_overhead), delay_ns_(delay_ns) {}

int IdealMedium::attach(Station* station, const Position&) {
  stations_.push_back(station);
  return static_cast<int>(stations_.size() - 1);
}

void IdealMedium::add_link(int a, int b) {
  links_.insert({std::min(a, b), std::max(a, b)});
}

bool IdealMedium::linked(int a, int b) const {
  return links_.count({std::min(a, b), std::max(a, b)}) > 0;
}

void IdealMedium::transmit(int station, Frame frame) {
  log_.append({queue_.now_ns(), LogKind::FrameTx, station, -1,
               frame_overhead_ + frame.payload.size(), {}});
  for (int r = 0; r < static_cast<int>(stations_.size()); ++r) {
    if (r == station || !linked(station, r)) {
      continue;
    }
    queue_.after(delay_ns_, [this, r, frame]() { stations_[r]->deliver_frame(frame); });
  }
}

void IdealMedium::inject(int dst_station, Frame frame, uint64_t delay_ns) {
  queue_.after(delay_ns, [this, dst_station, frame = std::move(frame)]() {
    stations_[dst_station]->deliver_frame(frame);
  });
}

}  // namespace laser::sim
