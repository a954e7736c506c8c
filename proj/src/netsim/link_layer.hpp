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

#include "netsim/fragment.hpp"
#include "netsim/medium.hpp"

namespace laser::sim {

// Glue between a node's network layer and the shared medium: outgoing
// packets are fragmented into MTU-sized frames, incoming frames are
// filtered by destination and reassembled.
class LinkLayer : public Station {
 public:
  LinkLayer(Medium& medium, EventQueue& queue, LinkAddr addr, size_t mtu_payload,
            uint64_t reassembly_timeout_ns, MetricsLog* log = nullptr,
            int node_index = -1)
      : medium_(medium),
        queue_(queue),
        addr_(addr),
        chunk_capacity_(mtu_payload > kFragmentHeaderSize
                            ? mtu_payload - kFragmentHeaderSize
                            : 1),
        reassembler_(reassembly_timeout_ns),
        log_(log),
        node_index_(node_index) {}

  int attach(const Position& pos) {
    station_ = medium_.attach(this, pos);
    return station_;
  }

  const LinkAddr& addr() const { return addr_; }
  int station() const { return station_; }

  void send_packet(ByteView packet, const LinkAddr& dst) {
    for (Bytes& frag : fragment_packet(next_message_id_++, packet, chunk_capacity_)) {
      medium_.transmit(station_, Frame{addr_, dst, std::move(frag)});
    }
  }

  void deliver_frame(const Frame& frame) override {
    if (!frame.dst.is_broadcast() && frame.dst != addr_) {
      return;  // addressed to someone else; still occupied the channel
    }
    size_t expired = reassembler_.purge_expired(queue_.now_ns());
    if (expired > 0 && log_ != nullptr) {
      log_->append({queue_.now_ns(), LogKind::ReassemblyExpired, node_index_, -1,
                    expired, {}});
    }
    auto packet = reassembler_.accept(frame.src, frame.payload, queue_.now_ns());
    if (packet && on_packet) {
      on_packet(frame.src, *packet);
    }
  }

  std::function<void(const LinkAddr& src, const Bytes& packet)> on_packet;

 private:
  Medium& medium_;
  EventQueue& queue_;
  LinkAddr addr_;
  size_t chunk_capacity_;
  Reassembler reassembler_;
  MetricsLog* log_;
  int node_index_;
  uint16_t next_message_id_ = 0;
  int station_ = -1;
};

}  // namespace laser::sim
