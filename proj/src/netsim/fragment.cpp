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

#include "netsim/fragment.hpp"

namespace laser::sim {

std::vector<Bytes> fragment_packet(uint16_t message_id, ByteView packet,
                                   size_t chunk_capacity) {
  if (chunk_capacity == 0) {
    throw std::invalid_argument("fragment chunk capacity must be positive");
  }
  if (packet.size() > 0xffff) {
    throw std::invalid_argument("packet too large to fragment");
  }
  size_t count = (packet.size() + chunk_capacity - 1) / chunk_capacity;
  if (count == 0) {
    count = 1;
  }
  if (count > 0xff) {
    throw std::invalid_argument("packet needs more than 255 fragments");
  }

  std::vector<Bytes> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    size_t off = i * chunk_capacity;
    size_t chunk = std::min(chunk_capacity, packet.size() - off);
    Bytes frag;
    frag.reserve(kFragmentHeaderSize + chunk);
    frag.push_back(static_cast<uint8_t>(message_id >> 8));
    frag.push_back(static_cast<uint8_t>(message_id));
    frag.push_back(static_cast<uint8_t>(i));
    frag.push_back(static_cast<uint8_t>(count));
    frag.push_back(static_cast<uint8_t>(packet.size() >> 8));
    frag.push_back(static_cast<uint8_t>(packet.size()));
    append(frag, packet.subspan(off, chunk));
    out.push_back(std::move(frag));
  }
  return out;
}

std::optional<FragmentHeader> parse_fragment_header(ByteView fragment) {
  if (fragment.size() < kFragmentHeaderSize) {
    return std::nullopt;
  }
  FragmentHeader h;
  h.message_id = static_cast<uint16_t>((fragment[0] << 8) | fragment[1]);
  h.index = fragment[2];
  h.count = fragment[3];
  h.total_len = static_cast<uint16_t>((fragment[4] << 8) | fragment[5]);
  if (h.count == 0 || h.index >= h.count) {
    return std::nullopt;
  }
  return h;
}

std::optional<Bytes> Reassembler::accept(const LinkAddr& src, ByteView fragment,
                                         uint64_t now_ns) {
  auto header = parse_fragment_header(fragment);
  if (!header) {
    return std::nullopt;
  }
  ByteView chunk = fragment.subspan(kFragmentHeaderSize);

  auto key = std::make_pair(src, header->message_id);
  Partial& p = partial_[key];
  if (p.count == 0) {
    p.count = header->count;
    p.total_len = header->total_len;
    p.created_ns = now_ns;
  } else if (p.count != header->count || p.total_len != header->total_len) {
    // Inconsistent with the partial set; restart from this fragment.
    p = Partial{};
    p.count = header->count;
    p.total_len = header->total_len;
    p.created_ns = now_ns;
  }
  p.chunks[header->index] = Bytes(chunk.begin(), chunk.end());

  if (p.chunks.size() < p.count) {
    return std::nullopt;
  }
  uint16_t total_len = p.total_len;
  Bytes packet;
  packet.reserve(total_len);
  for (auto& [idx, data] : p.chunks) {
    append(packet, data);
  }
  partial_.erase(key);
  if (packet.size() != total_len) {
    return std::nullopt;
  }
  return packet;
}

size_t Reassembler::purge_expired(uint64_t now_ns) {
  size_t dropped = 0;
  for (auto it = partial_.begin(); it != partial_.end();) {
    if (now_ns >= it->second.created_ns + timeout_ns_) {
      it = partial_.erase(it);
      ++dropped;
    } else {
      ++it;
    }
  }
  return dropped;
}

}  // namespace laser::sim
