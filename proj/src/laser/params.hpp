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

#include <cstddef>

namespace laser::proto {

struct Params {
  unsigned kdf_iterations = 1024;

  // Interest lifetimes. Discovery runs long because the manager may hold
  // requests until the node's secret is provisioned.
  double pit_lifetime_s = 4.0;
  double discover_pit_lifetime_s = 120.0;

  // Discovery keeps broadcasting while nothing answers; once an offer is
  // in hand the node probes for a strictly better path a bounded number
  // of times, then commits after a quiet period.
  double discover_retry_s = 30.0;
  int max_extra_rounds = 2;
  double commit_quiet_s = 5.0;

  // Relays stagger their onboarding requests so one broadcast does not
  // set off a synchronized burst from every onboarded neighbor.
  double relay_jitter_s = 0.5;

  // Loss recovery for the auth and route-advertisement requests; after
  // the retries run out the node falls back to a fresh discovery.
  double request_retry_s = 5.0;
  int request_max_retries = 3;

  double wakeup_jitter_s = 2.0;

  // Dual-epoch acceptance window after a cluster key refresh.
  double rak_grace_s = 10.0;

  // 0 disables session expiry / periodic refresh.
  double session_lifetime_s = 0.0;
  double rak_refresh_s = 0.0;

  size_t cs_capacity = 64;
};

}  // namespace laser::proto
