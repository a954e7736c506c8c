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

#include "util/bytes.hpp"

namespace laser::crypto {

// RFC 8018 PBKDF2 with HMAC-SHA256 as the PRF.
Bytes pbkdf2_hmac_sha256(ByteView password, ByteView salt, uint32_t iterations,
                         size_t dk_len);

}  // namespace laser::crypto
