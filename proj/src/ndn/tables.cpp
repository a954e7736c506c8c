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

#include "ndn/tables.hpp"

namespace laser::ndn {

Pit::Entry* Pit::find(const Name& name, uint64_t now_ns) {
  auto it = entries_.find(name.encode());
  if (it == entries_.end()) {
    return nullptr;
  }
  if (it->second.expiry_ns <= now_ns) {
    entries_.erase(it);
    return nullptr;
  }
  return &it->second;
}

Pit::Entry& Pit::insert(const Name& name, uint64_t expiry_ns) {
  Entry& e = entries_[name.encode()];
  e.expiry_ns = expiry_ns;
  return e;
}

void Pit::erase(const Name& name) { entries_.erase(name.encode()); }

bool Pit::add_in_record(Entry& entry, const InRecord& rec) {
  for (const auto& existing : entry.in_records) {
    if (existing == rec) {
      return false;
    }
  }
  entry.in_records.push_back(rec);
  return true;
}

void Fib::insert(const Name& prefix, FaceId face) {
  FibEntry& e = entries_[prefix.encode()];
  e.prefix = prefix;
  for (FaceId f : e.next_faces) {
    if (f == face) {
      return;
    }
  }
  e.next_faces.push_back(face);
}

const FibEntry* Fib::longest_prefix_match(const Name& name) const {
  for (size_t len = name.size() + 1; len-- > 0;) {
    auto it = entries_.find(name.prefix(len).encode());
    if (it != entries_.end()) {
      return &it->second;
    }
  }
  return nullptr;
}

const FibEntry* Fib::brute_force_match(const Name& name) const {
  const FibEntry* best = nullptr;
  for (const auto& [key, entry] : entries_) {
    if (entry.prefix.is_prefix_of(name)) {
      if (best == nullptr || entry.prefix.size() > best->prefix.size()) {
        best = &entry;
      }
    }
  }
  return best;
}

void ContentStore::set_capacity(size_t capacity) {
  capacity_ = capacity;
  while (store_.size() > capacity_) {
    store_.erase(lru_.back());
    lru_.pop_back();
  }
}

const Data* ContentStore::find(const Name& name) {
  auto it = store_.find(name.encode());
  if (it == store_.end()) {
    return nullptr;
  }
  lru_.splice(lru_.begin(), lru_, it->second.lru_pos);
  return &it->second.data;
}

void ContentStore::admit(const Data& data) {
  if (capacity_ == 0) {
    return;
  }
  if (admission_ && !admission_(data.name)) {
    return;
  }
  Bytes key = data.name.encode();
  auto it = store_.find(key);
  if (it != store_.end()) {
    it->second.data = data;
    lru_.splice(lru_.begin(), lru_, it->second.lru_pos);
    return;
  }
  if (store_.size() >= capacity_) {
    store_.erase(lru_.back());
    lru_.pop_back();
  }
  lru_.push_front(key);
  store_.emplace(std::move(key), Slot{data, lru_.begin()});
}

bool NonceTable::seen_and_record(const Name& name, uint32_t nonce, uint64_t now_ns) {
  // Lazily drop stale records.
  for (auto it = seen_.begin(); it != seen_.end();) {
    if (it->second <= now_ns) {
      it = seen_.erase(it);
    } else {
      ++it;
    }
  }
  auto key = std::make_pair(name.encode(), nonce);
  auto [it, inserted] = seen_.try_emplace(key, now_ns + window_ns_);
  if (!inserted) {
    return true;
  }
  return false;
}

}  // namespace laser::ndn
