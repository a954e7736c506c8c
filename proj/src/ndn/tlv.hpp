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

#include <cstdint>
#include <optional>

#include "util/bytes.hpp"

namespace laser::ndn {

// Minimal TLV wire encoding: 1-octet type, 2-octet big-endian length,
// then the value. Nested blocks follow the same layout. The full byte
// layout is documented in docs/wire-format.md.
namespace tlv {

constexpr uint8_t kInterest = 0x05;
constexpr uint8_t kData = 0x06;
constexpr uint8_t kName = 0x07;
constexpr uint8_t kNameComponent = 0x08;
constexpr uint8_t kNonce = 0x0a;
constexpr uint8_t kLifetime = 0x0c;
constexpr uint8_t kContent = 0x15;
constexpr uint8_t kKeyLocator = 0x16;
constexpr uint8_t kSignatureValue = 0x17;

// Control-message payload fields.
constexpr uint8_t kNodeId = 0x41;
constexpr uint8_t kNodeNonce = 0x42;
constexpr uint8_t kManagerId = 0x43;
constexpr uint8_t kManagerNonce = 0x44;
constexpr uint8_t kLinkAddrField = 0x45;
constexpr uint8_t kHopCount = 0x46;
constexpr uint8_t kAnchorId = 0x47;
constexpr uint8_t kKeyEpoch = 0x48;
constexpr uint8_t kPrefix = 0x49;
constexpr uint8_t kStatus = 0x4a;
constexpr uint8_t kRelayId = 0x4b;
constexpr uint8_t kWrappedPacket = 0x4c;
constexpr uint8_t kKeyBytes = 0x4d;

}  // namespace tlv

class TlvWriter {
 public:
  void put(uint8_t type, ByteView value);
  void put(uint8_t type, std::string_view value) {
    put(type, ByteView(reinterpret_cast<const uint8_t*>(value.data()), value.size()));
  }
  void put_u32(uint8_t type, uint32_t value);

  const Bytes& bytes() const { return out_; }
  Bytes take() { return std::move(out_); }

 private:
  Bytes out_;
};

class TlvReader {
 public:
  explicit TlvReader(ByteView data) : data_(data) {}

  bool done() const { return pos_ >= data_.size(); }

  // Reads the next block; empty optional on truncated input.
  struct Block {
    uint8_t type;
    ByteView value;
  };
  std::optional<Block> next();

  // Reads the next block and requires the given type.
  std::optional<ByteView> expect(uint8_t type);

  static std::optional<uint32_t> as_u32(ByteView value);

 private:
  ByteView data_;
  size_t pos_ = 0;
};

}  // namespace laser::ndn
