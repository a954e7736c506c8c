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

#include <functional>
#include <list>
#include <map>
#include <optional>
#include <vector>

#include "ndn/packet.hpp"
#include "util/linkaddr.hpp"

namespace laser::ndn {

using FaceId = int;

// Pending Interest Table. Entries are exact-name; each in-record keeps
// the downstream face and, for wireless faces, the link address the
// Interest came from so the Data can be returned unicast.
class Pit {
 public:
  struct InRecord {
    FaceId face;
    std::optional<LinkAddr> remote;
    bool operator==(const InRecord&) const = default;
  };
  struct Entry {
    std::vector<InRecord> in_records;
    uint64_t expiry_ns = 0;
  };

  // Returns the live entry or nullptr; expired entries are erased.
  Entry* find(const Name& name, uint64_t now_ns);
  Entry& insert(const Name& name, uint64_t expiry_ns);
  void erase(const Name& name);

  // Adds (or refreshes) an in-record; returns false if it was already present.
  static bool add_in_record(Entry& entry, const InRecord& rec);

  size_t size() const { return entries_.size(); }

 private:
  std::map<Bytes, Entry> entries_;  // keyed by encoded name
};

struct FibEntry {
  Name prefix;
  std::vector<FaceId> next_faces;
};

// Forwarding Information Base with longest-prefix-match lookup.
class Fib {
 public:
  void insert(const Name& prefix, FaceId face);
  const FibEntry* longest_prefix_match(const Name& name) const;

  // Reference implementation used by tests as an independent oracle.
  const FibEntry* brute_force_match(const Name& name) const;

  const std::map<Bytes, FibEntry>& entries() const { return entries_; }

 private:
  std::map<Bytes, FibEntry> entries_;  // keyed by encoded prefix
};

// Content Store: exact-name Data cache with LRU eviction. The admission
// predicate lets the host exclude classes of traffic from caching.
class ContentStore {
 public:
  explicit ContentStore(size_t capacity = 64) : capacity_(capacity) {}

  void set_capacity(size_t capacity);
  void set_admission(std::function<bool(const Name&)> predicate) {
    admission_ = std::move(predicate);
  }

  // Lookup refreshes LRU order on hit.
  const Data* find(const Name& name);
  void admit(const Data& data);

  size_t size() const { return store_.size(); }
  size_t capacity() const { return capacity_; }

 private:
  struct Slot {
    Data data;
    std::list<Bytes>::iterator lru_pos;
  };
  size_t capacity_;
  std::function<bool(const Name&)> admission_;
  std::map<Bytes, Slot> store_;
  std::list<Bytes> lru_;  // front = most recently used
};

// Recently seen (name, nonce) pairs; suppresses duplicate and looping
// Interests within a time window.
class NonceTable {
 public:
  explicit NonceTable(uint64_t window_ns) : window_ns_(window_ns) {}

  // Returns true if the pair was already seen (and still fresh).
  bool seen_and_record(const Name& name, uint32_t nonce, uint64_t now_ns);

 private:
  uint64_t window_ns_;
  std::map<std::pair<Bytes, uint32_t>, uint64_t> seen_;
};

}  // namespace laser::ndn
