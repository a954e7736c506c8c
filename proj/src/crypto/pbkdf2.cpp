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

#include "crypto/pbkdf2.hpp"

#include "crypto/hmac_sha256.hpp"

namespace laser::crypto {

Bytes pbkdf2_hmac_sha256(ByteView password, ByteView salt, uint32_t iterations,
                         size_t dk_len) {
  if (iterations == 0) {
    throw std::invalid_argument("pbkdf2 iteration count must be positive");
  }
  Bytes out;
  out.reserve(dk_len);
  uint32_t block_index = 1;
  while (out.size() < dk_len) {
    uint8_t index_be[4] = {static_cast<uint8_t>(block_index >> 24),
                           static_cast<uint8_t>(block_index >> 16),
                           static_cast<uint8_t>(block_index >> 8),
                           static_cast<uint8_t>(block_index)};
    HmacSha256 prf(password);
    prf.update(salt);
    prf.update(ByteView(index_be, 4));
    Digest256 u = prf.finish();
    Digest256 acc = u;
    for (uint32_t i = 1; i < iterations; ++i) {
      u = HmacSha256::mac(password, u);
      for (size_t j = 0; j < acc.size(); ++j) {
        acc[j] ^= u[j];
      }
    }
    size_t take = std::min(acc.size(), dk_len - out.size());
    out.insert(out.end(), acc.begin(), acc.begin() + take);
    ++block_index;
  }
  return out;
}

}  // namespace laser::crypto
