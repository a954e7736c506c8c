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

#include <array>
#include <compare>
#include <cstdint>

#include "util/bytes.hpp"

namespace laser {

// 8-octet link-layer address (EUI-64 style).
struct LinkAddr {
  std::array<uint8_t, 8> octets{};

  auto operator<=>(const LinkAddr&) const = default;

  static LinkAddr broadcast() {
    LinkAddr a;
    a.octets.fill(0xff);
    return a;
  }

  // Stable per-node address used by the simulator.
  static LinkAddr from_index(uint32_t index) {
    LinkAddr a;
    a.octets = {0x02, 0x00, 0x00, 0x00,
                static_cast<uint8_t>(index >> 24), static_cast<uint8_t>(index >> 16),
                static_cast<uint8_t>(index >> 8), static_cast<uint8_t>(index)};
    return a;
  }

  bool is_broadcast() const { return *this == broadcast(); }

  std::string to_hex() const { return hex_encode(octets); }

  static LinkAddr from_hex(std::string_view hex) {
    Bytes b = hex_decode(hex);
    if (b.size() != 8) {
      throw std::invalid_argument("link address must be 8 octets");
    }
    LinkAddr a;
    std::copy(b.begin(), b.end(), a.octets.begin());
    return a;
  }
};

}  // namespace laser
