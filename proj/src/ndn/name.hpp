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

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "ndn/tlv.hpp"
#include "util/bytes.hpp"

namespace laser::ndn {

// Hierarchical name: an ordered list of opaque octet-string components.
class Name {
 public:
  Name() = default;
  Name(std::initializer_list<std::string> components)
      : components_(components) {}

  // Parses a "/a/b/c" URI; %XX escapes are decoded.
  static Name from_uri(std::string_view uri);
  std::string to_uri() const;

  Bytes encode() const;
  static std::optional<Name> decode(ByteView wire);
  // Decodes a name block value (the inside of a Name TLV).
  static std::optional<Name> decode_value(ByteView value);

  Name& append(std::string_view component) {
    components_.emplace_back(component);
    return *this;
  }

  size_t size() const { return components_.size(); }
  bool empty() const { return components_.empty(); }
  const std::string& at(size_t i) const { return components_.at(i); }

  // Prefix relation; every name is a prefix of itself.
  bool is_prefix_of(const Name& other) const;

  Name prefix(size_t n_components) const;

  auto operator<=>(const Name&) const = default;

 private:
  std::vector<std::string> components_;
};

}  // namespace laser::ndn
