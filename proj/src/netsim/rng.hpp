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

#include <cmath>
#include <random>

#include "crypto/keys.hpp"
#include "util/bytes.hpp"

namespace laser::sim {

// Seeded PRNG for one simulation run. Distribution sampling is done by
// hand (not via std:: distributions) so that output streams do not depend
// on the standard library implementation.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }
  uint32_t next_u32() { return static_cast<uint32_t>(eng_() >> 32); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n).
  uint32_t below(uint32_t n) { return n == 0 ? 0 : next_u32() % n; }

  double exponential(double mean) { return -mean * std::log1p(-uniform01()); }

  Bytes bytes(size_t n) {
    Bytes out(n);
    for (auto& b : out) {
      b = static_cast<uint8_t>(eng_() >> 56);
    }
    return out;
  }

  crypto::Nonce16 nonce16() {
    crypto::Nonce16 out;
    fill(out.data(), out.size());
    return out;
  }

  crypto::Key128 key128() {
    crypto::Key128 out;
    fill(out.data(), out.size());
    return out;
  }

  crypto::Block16 block16() {
    crypto::Block16 out;
    fill(out.data(), out.size());
    return out;
  }

 private:
  void fill(uint8_t* dst, size_t n) {
    for (size_t i = 0; i < n; ++i) {
      dst[i] = static_cast<uint8_t>(eng_() >> 56);
    }
  }

  std::mt19937_64 eng_;
};

}  // namespace laser::sim
