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
#include <cstdint>

#include "util/bytes.hpp"

namespace laser::crypto {

using Digest256 = std::array<uint8_t, 32>;

// FIPS 180-4 SHA-256, incremental interface.
class Sha256 {
 public:
  Sha256() { reset(); }

  void reset();
  void update(ByteView data);
  Digest256 finish();

  static Digest256 digest(ByteView data) {
    Sha256 h;
    h.update(data);
    return h.finish();
  }

 private:
  void process_block(const uint8_t* block);

  std::array<uint32_t, 8> state_;
  std::array<uint8_t, 64> buffer_;
  size_t buffered_ = 0;
  uint64_t total_len_ = 0;
};

}  // namespace laser::crypto
