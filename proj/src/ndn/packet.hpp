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

#include <optional>

#include "crypto/keys.hpp"
#include "ndn/name.hpp"

namespace laser::ndn {

// HMAC signature plus the name of the key that produced it.
struct SignatureInfo {
  Name key_locator;
  crypto::Tag32 value{};
};

struct Interest {
  Name name;
  uint32_t nonce = 0;
  uint32_t lifetime_ms = 4000;
  std::optional<SignatureInfo> signature;

  Bytes encode() const;
  static std::optional<Interest> decode(ByteView wire);

  // Octets covered by the signature: the name in TLV form. Interests
  // carry no payload.
  Bytes signed_portion() const { return name.encode(); }

  void sign(const crypto::Key128& key, const Name& key_locator);
  bool verify(const crypto::Key128& key) const;
};

struct Data {
  Name name;
  Bytes content;
  SignatureInfo signature;

  Bytes encode() const;
  static std::optional<Data> decode(ByteView wire);

  // Octets covered by the signature: name TLV followed by the content.
  Bytes signed_portion() const;

  void sign(const crypto::Key128& key, const Name& key_locator);
  bool verify(const crypto::Key128& key) const;
};

// Peeks at the outer TLV type without a full parse.
enum class PacketKind { Interest, Data, Malformed };
PacketKind packet_kind(ByteView wire);

}  // namespace laser::ndn
