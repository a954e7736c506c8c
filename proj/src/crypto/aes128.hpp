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
#include <optional>

#include "util/bytes.hpp"

namespace laser::crypto {

using Key128 = std::array<uint8_t, 16>;
using Block16 = std::array<uint8_t, 16>;

// FIPS 197 AES-128 block cipher.
class Aes128 {
 public:
  explicit Aes128(const Key128& key);

  Block16 encrypt_block(const Block16& in) const;
  Block16 decrypt_block(const Block16& in) const;

 private:
  std::array<std::array<uint8_t, 16>, 11> round_keys_;
};

// CBC mode with PKCS#7 padding. Encryption output excludes the IV;
// message framing decides where the IV travels.
Bytes aes128_cbc_encrypt(const Key128& key, const Block16& iv, ByteView plaintext);

// Empty optional on malformed padding. Callers are expected to have
// authenticated the ciphertext before decrypting.
std::optional<Bytes> aes128_cbc_decrypt(const Key128& key, const Block16& iv,
                                        ByteView ciphertext);

}  // namespace laser::crypto
