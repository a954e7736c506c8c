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

#include <map>
#include <optional>
#include <string>

#include "util/linkaddr.hpp"

namespace laser::proto {

// Downstream Forwarding Base: node id -> next-hop link address for the
// nodes that rely on this node to reach the anchor. Installs are tagged
// with the route message's signature verdict; unverified installs are
// refused and counted, so tests can assert no entry ever bypassed
// verification.
class Dfb {
 public:
  bool install(const std::string& node_id, const LinkAddr& next_hop,
               bool signature_verified) {
    if (!signature_verified) {
      ++rejected_installs_;
      return false;
    }
    entries_[node_id] = next_hop;
    return true;
  }

  std::optional<LinkAddr> lookup(const std::string& node_id) const {
    auto it = entries_.find(node_id);
    if (it == entries_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  bool contains(const std::string& node_id) const { return entries_.count(node_id) > 0; }
  size_t size() const { return entries_.size(); }
  uint64_t rejected_installs() const { return rejected_installs_; }
  const std::map<std::string, LinkAddr>& entries() const { return entries_; }

 private:
  std::map<std::string, LinkAddr> entries_;
  uint64_t rejected_installs_ = 0;
};

}  // namespace laser::proto
