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

#include "doctest.h"

#include <list>

#include "ndn/tables.hpp"
#include "netsim/rng.hpp"

using namespace laser;
using namespace laser::ndn;

TEST_CASE("pit aggregation and expiry") {
  Pit pit;
  Name name{"an0", "n3", "x"};
  Pit::Entry& e = pit.insert(name, 1000);
  CHECK(Pit::add_in_record(e, {1, LinkAddr::from_index(9)}));
  CHECK_FALSE(Pit::add_in_record(e, {1, LinkAddr::from_index(9)}));  // dedup
  CHECK(Pit::add_in_record(e, {2, std::nullopt}));
  CHECK(e.in_records.size() == 2);

  CHECK(pit.find(name, 999) != nullptr);
  CHECK(pit.find(name, 1000) == nullptr);  // lazily erased at expiry
  CHECK(pit.size() == 0);
}

TEST_CASE("fib longest prefix match basics") {
  Fib fib;
  fib.insert(Name{"a"}, 1);
  fib.insert(Name{"a", "b"}, 2);

  const FibEntry* hit = fib.longest_prefix_match(Name{"a", "b", "c"});
  REQUIRE(hit != nullptr);
  CHECK(hit->prefix == Name{"a", "b"});

  hit = fib.longest_prefix_match(Name{"a", "x"});
  REQUIRE(hit != nullptr);
  CHECK(hit->prefix == Name{"a"});

  CHECK(fib.longest_prefix_match(Name{"z"}) == nullptr);
}

TEST_CASE("fib matches the brute-force oracle on random tables") {
  sim::Rng rng(17);
  const char* comps[] = {"a", "b", "c", "d"};
  for (int table = 0; table < 100; ++table) {
    Fib fib;
    uint32_t entries = 1 + rng.below(12);
    for (uint32_t i = 0; i < entries; ++i) {
      Name prefix;
      uint32_t len = 1 + rng.below(4);
      for (uint32_t c = 0; c < len; ++c) {
        prefix.append(comps[rng.below(4)]);
      }
      fib.insert(prefix, static_cast<FaceId>(rng.below(5)));
    }
    for (int probe = 0; probe < 50; ++probe) {
      Name name;
      uint32_t len = 1 + rng.below(5);
      for (uint32_t c = 0; c < len; ++c) {
        name.append(comps[rng.below(4)]);
      }
      const FibEntry* fast = fib.longest_prefix_match(name);
      const FibEntry* slow = fib.brute_force_match(name);
      CHECK(fast == slow);
    }
  }
}

namespace {

Data make_data(const Name& name) {
  Data d;
  d.name = name;
  d.content = to_bytes("x");
  return d;
}

}  // namespace

TEST_CASE("content store lru against a reference model") {
  sim::Rng rng(23);
  ContentStore cs(8);

  // reference: list of names, front = most recently used
  std::list<std::string> model;
  auto touch = [&](const std::string& key) {
    model.remove(key);
    model.push_front(key);
    while (model.size() > 8) {
      model.pop_back();
    }
  };

  for (int step = 0; step < 2000; ++step) {
    std::string key = "k" + std::to_string(rng.below(20));
    Name name{key};
    if (rng.below(2) == 0) {
      cs.admit(make_data(name));
      touch(key);
    } else {
      bool hit = cs.find(name) != nullptr;
      bool model_hit = std::find(model.begin(), model.end(), key) != model.end();
      CHECK(hit == model_hit);
      if (hit) {
        touch(key);
      }
    }
    CHECK(cs.size() == model.size());
    CHECK(cs.size() <= cs.capacity());
  }
}

TEST_CASE("content store admission predicate") {
  ContentStore cs(4);
  cs.set_admission([](const Name& n) { return n.at(0) != "discover"; });
  cs.admit(make_data(Name{"discover", "n1"}));
  CHECK(cs.size() == 0);
  cs.admit(make_data(Name{"an0", "n1"}));
  CHECK(cs.size() == 1);
}

TEST_CASE("content store capacity zero never stores") {
  ContentStore cs(0);
  cs.admit(make_data(Name{"a"}));
  CHECK(cs.size() == 0);
  CHECK(cs.find(Name{"a"}) == nullptr);
}

TEST_CASE("nonce table suppresses within the window only") {
  NonceTable nonces(8ull * 1000 * 1000 * 1000);
  Name name{"an0", "n1"};
  CHECK_FALSE(nonces.seen_and_record(name, 7, 0));
  CHECK(nonces.seen_and_record(name, 7, 1000));
  // different nonce, same name: not a duplicate
  CHECK_FALSE(nonces.seen_and_record(name, 8, 1000));
  // after the window the same pair is fresh again
  CHECK_FALSE(nonces.seen_and_record(name, 7, 9ull * 1000 * 1000 * 1000));
}
