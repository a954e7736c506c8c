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

#include <set>

#include "island_helpers.hpp"

using namespace laser;
using namespace laser::proto;
using testutil::make_chain;
using testutil::make_tree;
using testutil::probe_name;
using testutil::random_parents;
using testutil::tree_path;

namespace {

// Ships one probe on a quiescent island and returns (forwarding path,
// transmitting nodes) observed during its round trip.
struct ProbeTrace {
  std::vector<int> path;
  std::set<int> transmitters;
  bool satisfied = false;
};

ProbeTrace run_probe(Island& island, int src, const ndn::Name& name) {
  size_t log_start = island.log().records().size();
  island.send_probe(src, name);
  island.run_for(2.0);

  ProbeTrace out;
  std::string uri = name.to_uri();
  const auto& records = island.log().records();
  for (size_t i = log_start; i < records.size(); ++i) {
    const auto& rec = records[i];
    if (rec.kind == sim::LogKind::InterestForward && rec.note == uri) {
      out.path.push_back(rec.node);
    }
    if (rec.kind == sim::LogKind::FrameTx) {
      out.transmitters.insert(rec.node);
    }
  }
  out.satisfied = island.probe_satisfied(src, name);
  return out;
}

}  // namespace

TEST_CASE("siblings route through their first common ancestor") {
  // an0 -> n1 -> {n2, n3}
  auto island = make_tree({-1, 0, 1, 1}, 21);
  island->run();
  REQUIRE(island->all_onboarded());

  ProbeTrace trace = run_probe(*island, 2, probe_name(*island, 3, 0));
  CHECK(trace.satisfied);
  CHECK(trace.path == std::vector<int>{2, 1, 3});  // up to n1, down to n3
}

TEST_CASE("a leaf with an empty downstream table defaults toward the anchor") {
  auto island = make_chain(3, 22);
  island->run();
  REQUIRE(island->all_onboarded());
  CHECK(island->node(3).dfb().size() == 0);

  // n3 -> n1: every hop climbs until the common ancestor (n1 itself)
  ProbeTrace trace = run_probe(*island, 3, probe_name(*island, 1, 0));
  CHECK(trace.satisfied);
  CHECK(trace.path == std::vector<int>{3, 2, 1});

  // and the anchor answers probes addressed to its own prefix
  ProbeTrace up = run_probe(*island, 3, probe_name(*island, 0, 1));
  CHECK(up.satisfied);
  CHECK(up.path == std::vector<int>{3, 2, 1, 0});
}

TEST_CASE("fifteen-node random tree: all ordered pairs match the path oracle") {
  sim::Rng tree_rng(2024);
  std::vector<int> parents = random_parents(tree_rng, 15);
  auto island = make_tree(parents, 23);
  island->run();
  REQUIRE(island->all_onboarded());

  // the committed forest is exactly the generating tree, with every
  // node one hop deeper than its relay
  for (int i = 1; i < 15; ++i) {
    const LaserNode& node = island->node(i);
    std::string expected_parent =
        parents[i] == 0 ? "an0" : "n" + std::to_string(parents[i]);
    CHECK(node.upstream_id() == expected_parent);
    CHECK(*node.hops() == *island->node(parents[i]).hops() + 1);
  }

  int k = 0;
  for (int src = 0; src < 15; ++src) {
    for (int dst = 0; dst < 15; ++dst) {
      if (src == dst) {
        continue;
      }
      ProbeTrace trace = run_probe(*island, src, probe_name(*island, dst, k++));
      CHECK(trace.satisfied);
      CHECK(trace.path == tree_path(parents, src, dst));
    }
  }
}

TEST_CASE("downstream tables: the anchor-rooted walk reaches every member, acyclically") {
  sim::Rng tree_rng(97);
  std::vector<int> parents = random_parents(tree_rng, 20);
  auto island = make_tree(parents, 98);
  island->run();
  REQUIRE(island->all_onboarded());

  std::map<LinkAddr, int> by_addr;
  for (size_t i = 0; i < island->node_count(); ++i) {
    by_addr[island->node(static_cast<int>(i)).addr()] = static_cast<int>(i);
  }

  // Follow the distributed state: starting at the anchor, repeatedly ask
  // the current hop for its next hop toward the destination.
  for (int dst = 1; dst < 20; ++dst) {
    const std::string& dst_id = island->node(dst).id();
    int at = 0;
    size_t steps = 0;
    while (at != dst) {
      auto hop = island->node(at).dfb().lookup(dst_id);
      REQUIRE(hop.has_value());
      at = by_addr.at(*hop);
      REQUIRE(++steps <= island->node_count());  // acyclic: no revisits needed
    }
    CHECK(steps == *island->node(dst).hops());  // exactly the tree depth
  }

  // next-hop edges form a forest rooted at the anchor
  for (int i = 1; i < 20; ++i) {
    int at = i;
    size_t steps = 0;
    while (at != 0) {
      const LaserNode& node = island->node(at);
      REQUIRE(node.next_hop().has_value());
      at = by_addr.at(*node.next_hop());
      REQUIRE(++steps <= island->node_count());
    }
  }
}

TEST_CASE("data returns over exactly the interest path (no bystander transmits)") {
  // Path symmetry on random trees: during one probe on an otherwise idle
  // island, the only transmitting nodes are those on the oracle path.
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    sim::Rng tree_rng(seed * 31);
    int n = 8 + static_cast<int>(tree_rng.below(13));  // 8..20 nodes
    std::vector<int> parents = random_parents(tree_rng, n);
    auto island = make_tree(parents, seed);
    island->run();
    REQUIRE(island->all_onboarded());

    sim::Rng pick(seed);
    for (int probe = 0; probe < 10; ++probe) {
      int src = static_cast<int>(pick.below(static_cast<uint32_t>(n)));
      int dst = static_cast<int>(pick.below(static_cast<uint32_t>(n)));
      if (src == dst) {
        continue;
      }
      ProbeTrace trace =
          run_probe(*island, src, probe_name(*island, dst, 1000 + probe));
      CHECK(trace.satisfied);
      std::vector<int> oracle = tree_path(parents, src, dst);
      CHECK(trace.path == oracle);
      std::set<int> allowed(oracle.begin(), oracle.end());
      CHECK(trace.transmitters == allowed);
    }
  }
}

TEST_CASE("unroutable names are dropped, not flooded") {
  auto island = make_chain(2, 29);
  island->run();
  REQUIRE(island->all_onboarded());

  // unknown top-level prefix from an onboarded leaf: climbs to the
  // anchor, which has nowhere to send it
  uint64_t anchor_drops_before = island->forwarder(0).counters().interests_dropped;
  size_t log_before = island->log().records().size();
  island->send_probe(2, ndn::Name{"elsewhere", "thing"});
  island->run_for(2.0);
  CHECK(island->forwarder(0).counters().interests_dropped == anchor_drops_before + 1);
  CHECK_FALSE(island->probe_satisfied(2, ndn::Name{"elsewhere", "thing"}));

  // a cluster name for a node that never advertised: the anchor drops it
  island->send_probe(2, ndn::Name{"an0", "n99", "echo", "0"});
  island->run_for(2.0);
  CHECK_FALSE(island->probe_satisfied(2, ndn::Name{"an0", "n99", "echo", "0"}));
  (void)log_before;
}

TEST_CASE("a node that never onboarded emits nothing for cluster names") {
  proto::IslandConfig cfg = testutil::ideal_cfg();
  cfg.t_max_s = 5.0;
  auto island = std::make_unique<Island>(cfg, 31);
  island->add_anchor("an0", "im0", {});
  island->add_node("n1", {}, 1.0);  // no links: never onboards
  island->run();
  CHECK_FALSE(island->all_onboarded());

  size_t tx_before = 0;
  for (const auto& rec : island->log().records()) {
    if (rec.kind == sim::LogKind::FrameTx && rec.node == 1) {
      ++tx_before;
    }
  }
  island->send_probe(1, ndn::Name{"an0", "n5", "echo", "0"});
  island->run_for(2.0);
  size_t tx_after = 0;
  for (const auto& rec : island->log().records()) {
    if (rec.kind == sim::LogKind::FrameTx && rec.node == 1) {
      ++tx_after;
    }
  }
  // no route, no next hop, default strategy declines: zero frames
  CHECK(tx_after == tx_before);
  CHECK(island->forwarder(1).counters().interests_dropped >= 1);
}

TEST_CASE("interests are cached and served from the content store") {
  auto island = make_chain(2, 37);
  island->run();
  REQUIRE(island->all_onboarded());

  // first exchange populates caches along the path
  ndn::Name name = probe_name(*island, 2, 0);
  ProbeTrace first = run_probe(*island, 1, name);
  CHECK(first.satisfied);
  CHECK(first.path == std::vector<int>{1, 2});

  // the same name again from further away stops at the cached copy
  uint64_t hits_before = island->forwarder(1).counters().cs_hits;
  ProbeTrace second = run_probe(*island, 0, name);
  CHECK(second.satisfied);
  CHECK(second.path == std::vector<int>{0});  // answered at n1's cache
  CHECK(island->forwarder(1).counters().cs_hits == hits_before + 1);
}
