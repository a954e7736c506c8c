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

#include "ndn/name.hpp"

namespace laser::ndn {

namespace {

bool needs_escape(char c) {
  return c == '/' || c == '%' || static_cast<unsigned char>(c) < 0x21 ||
         static_cast<unsigned char>(c) > 0x7e;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Name Name::from_uri(std::string_view uri) {
  Name name;
  size_t pos = 0;
  if (!uri.empty() && uri[0] == '/') {
    pos = 1;
  }
  std::string component;
  auto flush = [&]() {
    if (!component.empty()) {
      name.components_.push_back(component);
      component.clear();
    }
  };
  while (pos < uri.size()) {
    char c = uri[pos];
    if (c == '/') {
      flush();
      ++pos;
    } else if (c == '%' && pos + 2 < uri.size() && hex_value(uri[pos + 1]) >= 0 &&
               hex_value(uri[pos + 2]) >= 0) {
      component.push_back(static_cast<char>((hex_value(uri[pos + 1]) << 4) |
                                            hex_value(uri[pos + 2])));
      pos += 3;
    } else {
      component.push_back(c);
      ++pos;
    }
  }
  flush();
  return name;
}

std::string Name::to_uri() const {
  if (components_.empty()) {
    return "/";
  }
  static const char* digits = "0123456789ABCDEF";
  std::string out;
  for (const auto& comp : components_) {
    out.push_back('/');
    for (char c : comp) {
      if (needs_escape(c)) {
        out.push_back('%');
        out.push_back(digits[static_cast<unsigned char>(c) >> 4]);
        out.push_back(digits[static_cast<unsigned char>(c) & 0x0f]);
      } else {
        out.push_back(c);
      }
    }
  }
  return out;
}

Bytes Name::encode() const {
  TlvWriter inner;
  for (const auto& comp : components_) {
    inner.put(tlv::kNameComponent, comp);
  }
  TlvWriter outer;
  outer.put(tlv::kName, inner.bytes());
  return outer.take();
}

std::optional<Name> Name::decode(ByteView wire) {
  TlvReader reader(wire);
  auto value = reader.expect(tlv::kName);
  if (!value) {
    return std::nullopt;
  }
  return decode_value(*value);
}

std::optional<Name> Name::decode_value(ByteView value) {
  Name name;
  TlvReader comps(value);
  while (!comps.done()) {
    auto c = comps.expect(tlv::kNameComponent);
    if (!c) {
      return std::nullopt;
    }
    name.components_.emplace_back(c->begin(), c->end());
  }
  return name;
}

bool Name::is_prefix_of(const Name& other) const {
  if (components_.size() > other.components_.size()) {
    return false;
  }
  for (size_t i = 0; i < components_.size(); ++i) {
    if (components_[i] != other.components_[i]) {
      return false;
    }
  }
  return true;
}

Name Name::prefix(size_t n_components) const {
  Name out;
  size_t n = std::min(n_components, components_.size());
  out.components_.assign(components_.begin(), components_.begin() + n);
  return out;
}

}  // namespace laser::ndn
