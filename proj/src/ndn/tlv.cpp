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

#include "ndn/tlv.hpp"

namespace laser::ndn {

void TlvWriter::put(uint8_t type, ByteView value) {
  if (value.size() > 0xffff) {
    throw std::invalid_argument("tlv value exceeds 65535 octets");
  }
  out_.push_back(type);
  out_.push_back(static_cast<uint8_t>(value.size() >> 8));
  out_.push_back(static_cast<uint8_t>(value.size()));
  append(out_, value);
}

void TlvWriter::put_u32(uint8_t type, uint32_t value) {
  uint8_t be[4] = {static_cast<uint8_t>(value >> 24), static_cast<uint8_t>(value >> 16),
                   static_cast<uint8_t>(value >> 8), static_cast<uint8_t>(value)};
  put(type, ByteView(be, 4));
}

std::optional<TlvReader::Block> TlvReader::next() {
  if (pos_ + 3 > data_.size()) {
    return std::nullopt;
  }
  uint8_t type = data_[pos_];
  size_t len = (size_t(data_[pos_ + 1]) << 8) | data_[pos_ + 2];
  if (pos_ + 3 + len > data_.size()) {
    return std::nullopt;
  }
  Block b{type, data_.subspan(pos_ + 3, len)};
  pos_ += 3 + len;
  return b;
}

std::optional<ByteView> TlvReader::expect(uint8_t type) {
  auto b = next();
  if (!b || b->type != type) {
    return std::nullopt;
  }
  return b->value;
}

std::optional<uint32_t> TlvReader::as_u32(ByteView value) {
  if (value.size() != 4) {
    return std::nullopt;
  }
  return (uint32_t(value[0]) << 24) | (uint32_t(value[1]) << 16) |
         (uint32_t(value[2]) << 8) | uint32_t(value[3]);
}

}  // namespace laser::ndn
