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

#include <map>
#include <optional>

#include "util/bytes.hpp"
#include "util/linkaddr.hpp"

namespace laser::sim {

// Hop-by-hop link adaptation: packets larger than one frame are cut into
// sequence-numbered fragments carrying (message id, index, count, total
// length) in a 6-octet header. Reassembly needs every fragment; partial
// sets expire.

constexpr size_t kFragmentHeaderSize = 6;

struct FragmentHeader {
  uint16_t message_id;
  uint8_t index;
  uint8_t count;
  uint16_t total_len;
};

// Splits `packet` into fragment payloads (header + chunk), each chunk at
// most `chunk_capacity` octets. Always emits at least one fragment.
std::vector<Bytes> fragment_packet(uint16_t message_id, ByteView packet,
                                   size_t chunk_capacity);

std::optional<FragmentHeader> parse_fragment_header(ByteView fragment);

class Reassembler {
 public:
  explicit Reassembler(uint64_t timeout_ns) : timeout_ns_(timeout_ns) {}

  // Feeds one fragment; returns the whole packet when it completes.
  // Callers drive expiry with purge_expired().
  std::optional<Bytes> accept(const LinkAddr& src, ByteView fragment, uint64_t now_ns);

  // Drops partial messages older than the timeout; returns how many.
  size_t purge_expired(uint64_t now_ns);

  size_t pending() const { return partial_.size(); }

 private:
  struct Partial {
    std::map<uint8_t, Bytes> chunks;
    uint8_t count = 0;
    uint16_t total_len = 0;
    uint64_t created_ns = 0;
  };

  uint64_t timeout_ns_;
  std::map<std::pair<LinkAddr, uint16_t>, Partial> partial_;
};

}  // namespace laser::sim
