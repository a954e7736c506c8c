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

#include "crypto/sha256.hpp"

namespace laser::crypto {

// RFC 2104 HMAC with SHA-256.
class HmacSha256 {
 public:
  explicit HmacSha256(ByteView key);

  void update(ByteView data) { inner_.update(data); }
  Digest256 finish();

  static Digest256 mac(ByteView key, ByteView msg) {
    HmacSha256 h(key);
    h.update(msg);
    return h.finish();
  }

 private:
  Sha256 inner_;
  std::array<uint8_t, 64> opad_key_;
};

// Constant-time comparison; false if lengths differ.
bool constant_time_equal(ByteView a, ByteView b);

}  // namespace laser::crypto
