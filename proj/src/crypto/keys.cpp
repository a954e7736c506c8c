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

#include "crypto/keys.hpp"

#include "crypto/pbkdf2.hpp"

namespace laser::crypto {

namespace {

void split_256(const Bytes& dk, Key128& low, Key128& high) {
  std::copy(dk.begin(), dk.begin() + 16, low.begin());
  std::copy(dk.begin() + 16, dk.begin() + 32, high.begin());
}

}  // namespace

LongLivedKeys derive_long_lived(const PresharedKey& pin, std::string_view node_id,
                                unsigned iterations) {
  if (pin.secret.empty()) {
    throw std::invalid_argument("pre-shared key must be non-empty");
  }
  if (node_id.empty()) {
    throw std::invalid_argument("node id must be non-empty");
  }
  Bytes salt = to_bytes(node_id);
  Bytes dk = pbkdf2_hmac_sha256(pin.secret, salt, iterations, 32);
  LongLivedKeys keys;
  split_256(dk, keys.ak, keys.kdk);
  return keys;
}

TransientKeys derive_transient(const Key128& kdk, const Nonce16& node_nonce,
                               const Nonce16& manager_nonce, unsigned iterations) {
  Bytes salt;
  salt.reserve(32);
  salt.insert(salt.end(), node_nonce.begin(), node_nonce.end());
  salt.insert(salt.end(), manager_nonce.begin(), manager_nonce.end());
  Bytes dk = pbkdf2_hmac_sha256(kdk, salt, iterations, 32);
  TransientKeys keys;
  split_256(dk, keys.tak, keys.tek);
  return keys;
}

Tag32 hmac_sign(const Key128& key, ByteView payload) {
  return HmacSha256::mac(key, payload);
}

bool hmac_verify(const Key128& key, ByteView payload, ByteView tag) {
  if (tag.size() != 32) {
    return false;
  }
  Tag32 expected = hmac_sign(key, payload);
  return constant_time_equal(expected, tag);
}

Bytes channel_seal(const Key128& tek, ByteView plaintext, const Block16& iv) {
  Bytes out(iv.begin(), iv.end());
  Bytes ct = aes128_cbc_encrypt(tek, iv, plaintext);
  append(out, ct);
  return out;
}

std::optional<Bytes> channel_open(const Key128& tek, ByteView sealed) {
  if (sealed.size() < 32) {  // iv + at least one block
    return std::nullopt;
  }
  Block16 iv;
  std::copy(sealed.begin(), sealed.begin() + 16, iv.begin());
  return aes128_cbc_decrypt(tek, iv, sealed.subspan(16));
}

}  // namespace laser::crypto
