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

#include <functional>
#include <memory>

#include "ndn/tables.hpp"

namespace laser::ndn {

enum class FaceKind {
  Wireless,  // broadcast link; ad-hoc, accepts frames from any link address
  App,       // local application channel
};

// Where a forwarded packet should go: a face, and for wireless faces the
// link-layer destination (unicast address or broadcast).
struct HopTarget {
  FaceId face;
  std::optional<LinkAddr> dst;
};

class Forwarder;

// Per-prefix forwarding strategy. Returning an empty target list declines
// the Interest, which the forwarder counts as a drop.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::vector<HopTarget> decide(const Interest& interest, FaceId in_face,
                                        const std::optional<LinkAddr>& link_src,
                                        const FibEntry* fib_match,
                                        Forwarder& forwarder) = 0;
};

// Default strategy: forward to every face in the FIB entry; wireless
// faces get a broadcast frame. Declines when there is no FIB match.
class MulticastStrategy : public Strategy {
 public:
  std::vector<HopTarget> decide(const Interest&, FaceId in_face,
                                const std::optional<LinkAddr>&, const FibEntry* fib_match,
                                Forwarder& forwarder) override;
};

// The Interest/Data forwarding pipeline of one node: CS -> PIT -> FIB
// plus a per-prefix strategy. Single threaded; driven by face callbacks.
class Forwarder {
 public:
  using SendFn = std::function<void(const Bytes& packet, const std::optional<LinkAddr>& dst)>;
  using Clock = std::function<uint64_t()>;  // nanoseconds

  struct Counters {
    uint64_t interests_in = 0;
    uint64_t data_in = 0;
    uint64_t cs_hits = 0;
    uint64_t interests_aggregated = 0;
    uint64_t interests_dropped = 0;  // no route / strategy declined
    uint64_t duplicate_nonces = 0;
    uint64_t unsolicited_data = 0;
    uint64_t malformed = 0;
  };

  explicit Forwarder(Clock now_ns);

  FaceId add_face(FaceKind kind, SendFn send);
  FaceKind face_kind(FaceId id) const { return faces_.at(id).kind; }
  std::vector<FaceId> wireless_faces() const;

  void register_prefix(const Name& prefix, FaceId face) { fib_.insert(prefix, face); }
  void register_strategy(const Name& prefix, std::shared_ptr<Strategy> strategy);

  // Entry point for packets arriving on a face. link_src is the frame's
  // source address on wireless faces.
  void receive(FaceId in_face, const std::optional<LinkAddr>& link_src, ByteView packet);

  Pit& pit() { return pit_; }
  Fib& fib() { return fib_; }
  ContentStore& cs() { return cs_; }
  const Counters& counters() const { return counters_; }
  uint64_t now_ns() const { return now_(); }

  // Observation hook used by the simulator's trace log.
  std::function<void(const Interest&, const std::vector<HopTarget>&)> on_interest_forwarded;

 private:
  struct Face {
    FaceKind kind;
    SendFn send;
  };

  void process_interest(FaceId in_face, const std::optional<LinkAddr>& link_src,
                        Interest&& interest, ByteView wire);
  void process_data(FaceId in_face, const std::optional<LinkAddr>& link_src,
                    Data&& data, ByteView wire);
  Strategy& strategy_for(const Name& name);
  void send_on(FaceId face, const std::optional<LinkAddr>& dst, ByteView wire);

  Clock now_;
  std::vector<Face> faces_;
  Pit pit_;
  Fib fib_;
  ContentStore cs_;
  NonceTable nonces_;
  std::map<Bytes, std::shared_ptr<Strategy>> strategies_;  // keyed by encoded prefix
  MulticastStrategy default_strategy_;
  Counters counters_;
};

}  // namespace laser::ndn
