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
#include <string>

#include "crypto/aes128.hpp"
#include "crypto/hmac_sha256.hpp"

namespace laser::crypto {

// Key hierarchy used by the onboarding protocol: a device's pre-shared
// secret yields a long-lived authentication/derivation pair, from which
// per-session transient keys are derived with the handshake nonces.
// All derivations run PBKDF2-HMAC-SHA256 with a 256-bit output that is
// split into two 128-bit keys.

constexpr unsigned kDefaultKdfIterations = 1024;

using Nonce16 = std::array<uint8_t, 16>;
using Tag32 = std::array<uint8_t, 32>;

struct PresharedKey {
  Bytes secret;  // never serialized into wire messages
};

struct LongLivedKeys {
  Key128 ak;   // authentication key
  Key128 kdk;  // key-derivation key
};

struct TransientKeys {
  Key128 tak;  // session authentication key
  Key128 tek;  // session encryption key
};

struct RoutingAuthKey {
  Key128 key{};
  std::string anchor_id;
  uint32_t epoch = 0;
};

// PBKDF2(password=pin, salt=node id) -> ak || kdk.
LongLivedKeys derive_long_lived(const PresharedKey& pin, std::string_view node_id,
                                unsigned iterations = kDefaultKdfIterations);

// PBKDF2(password=kdk, salt=node nonce || manager nonce) -> tak || tek.
TransientKeys derive_transient(const Key128& kdk, const Nonce16& node_nonce,
                               const Nonce16& manager_nonce,
                               unsigned iterations = kDefaultKdfIterations);

Tag32 hmac_sign(const Key128& key, ByteView payload);

// Constant-time; rejects (rather than throws) on a wrong-length tag.
bool hmac_verify(const Key128& key, ByteView payload, ByteView tag);

// AES-128-CBC with the IV carried in front of the ciphertext.
Bytes channel_seal(const Key128& tek, ByteView plaintext, const Block16& iv);
std::optional<Bytes> channel_open(const Key128& tek, ByteView sealed);

}  // namespace laser::crypto
