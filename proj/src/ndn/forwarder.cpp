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

#include "ndn/forwarder.hpp"

namespace laser::ndn {

namespace {
constexpr uint64_t kNonceWindowNs = 8ull * 1000 * 1000 * 1000;
}

std::vector<HopTarget> MulticastStrategy::decide(const Interest&, FaceId in_face,
                                                 const std::optional<LinkAddr>&,
                                                 const FibEntry* fib_match,
                                                 Forwarder& forwarder) {
  if (fib_match == nullptr) {
    return {};
  }
  std::vector<HopTarget> targets;
  for (FaceId face : fib_match->next_faces) {
    if (face == in_face) {
      continue;
    }
    if (forwarder.face_kind(face) == FaceKind::Wireless) {
      targets.push_back({face, LinkAddr::broadcast()});
    } else {
      targets.push_back({face, std::nullopt});
    }
  }
  return targets;
}

Forwarder::Forwarder(Clock now_ns) : now_(std::move(now_ns)), nonces_(kNonceWindowNs) {}

FaceId Forwarder::add_face(FaceKind kind, SendFn send) {
  faces_.push_back({kind, std::move(send)});
  return static_cast<FaceId>(faces_.size() - 1);
}

std::vector<FaceId> Forwarder::wireless_faces() const {
  std::vector<FaceId> out;
  for (size_t i = 0; i < faces_.size(); ++i) {
    if (faces_[i].kind == FaceKind::Wireless) {
      out.push_back(static_cast<FaceId>(i));
    }
  }
  return out;
}

void Forwarder::register_strategy(const Name& prefix, std::shared_ptr<Strategy> strategy) {
  strategies_[prefix.encode()] = std::move(strategy);
}

Strategy& Forwarder::strategy_for(const Name& name) {
  // Longest registered prefix wins; a strategy at the root prefix
  // overrides the default for everything not matched more specifically.
  Strategy* best = nullptr;
  size_t best_len = 0;
  bool found = false;
  for (const auto& [key, strategy] : strategies_) {
    auto prefix = Name::decode(key);
    if (prefix && prefix->is_prefix_of(name) &&
        (!found || prefix->size() >= best_len)) {
      best = strategy.get();
      best_len = prefix->size();
      found = true;
    }
  }
  return found ? *best : default_strategy_;
}

void Forwarder::send_on(FaceId face, const std::optional<LinkAddr>& dst, ByteView wire) {
  const Face& f = faces_.at(face);
  if (f.send) {
    f.send(Bytes(wire.begin(), wire.end()), dst);
  }
}

void Forwarder::receive(FaceId in_face, const std::optional<LinkAddr>& link_src,
                        ByteView packet) {
  switch (packet_kind(packet)) {
    case PacketKind::Interest: {
      auto interest = Interest::decode(packet);
      if (!interest) {
        ++counters_.malformed;
        return;
      }
      process_interest(in_face, link_src, std::move(*interest), packet);
      break;
    }
    case PacketKind::Data: {
      auto data = Data::decode(packet);
      if (!data) {
        ++counters_.malformed;
        return;
      }
      process_data(in_face, link_src, std::move(*data), packet);
      break;
    }
    case PacketKind::Malformed:
      ++counters_.malformed;
      break;
  }
}

void Forwarder::process_interest(FaceId in_face, const std::optional<LinkAddr>& link_src,
                                 Interest&& interest, ByteView wire) {
  ++counters_.interests_in;
  uint64_t now = now_();

  if (nonces_.seen_and_record(interest.name, interest.nonce, now)) {
    ++counters_.duplicate_nonces;
    return;
  }

  if (const Data* cached = cs_.find(interest.name)) {
    ++counters_.cs_hits;
    send_on(in_face, link_src, cached->encode());
    return;
  }

  if (Pit::Entry* entry = pit_.find(interest.name, now)) {
    // Already forwarded and pending: aggregate the new downstream.
    Pit::add_in_record(*entry, {in_face, link_src});
    ++counters_.interests_aggregated;
    return;
  }

  const FibEntry* fib_match = fib_.longest_prefix_match(interest.name);
  std::vector<HopTarget> targets =
      strategy_for(interest.name).decide(interest, in_face, link_src, fib_match, *this);

  // Never bounce an Interest straight back to the link peer it came from.
  std::erase_if(targets, [&](const HopTarget& t) {
    return t.face == in_face && t.dst.has_value() && link_src.has_value() &&
           *t.dst == *link_src;
  });

  if (targets.empty()) {
    ++counters_.interests_dropped;
    return;
  }

  Pit::Entry& entry =
      pit_.insert(interest.name, now + uint64_t(interest.lifetime_ms) * 1000000ull);
  Pit::add_in_record(entry, {in_face, link_src});

  for (const HopTarget& t : targets) {
    send_on(t.face, t.dst, wire);
  }
  if (on_interest_forwarded) {
    on_interest_forwarded(interest, targets);
  }
}

void Forwarder::process_data(FaceId in_face, const std::optional<LinkAddr>& link_src,
                             Data&& data, ByteView wire) {
  ++counters_.data_in;
  uint64_t now = now_();

  Pit::Entry* entry = pit_.find(data.name, now);
  if (entry == nullptr) {
    ++counters_.unsolicited_data;
    return;
  }

  // Detach the entry before forwarding: downstream faces may feed new
  // packets straight back into this pipeline.
  std::vector<Pit::InRecord> downstreams = std::move(entry->in_records);
  pit_.erase(data.name);
  cs_.admit(data);

  for (const Pit::InRecord& rec : downstreams) {
    if (rec.face == in_face && rec.remote == link_src) {
      continue;  // the downstream is the one who answered; nothing to return
    }
    send_on(rec.face, rec.remote, wire);
  }
}

}  // namespace laser::ndn
