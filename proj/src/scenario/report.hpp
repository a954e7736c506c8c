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

#include <optional>

#include "scenario/scenario.hpp"

namespace laser::scn {

// Per-node outcome of one run. Anchors are not included: they are
// unconstrained and not part of the onboarding statistics.
struct NodeRow {
  uint64_t run_id = 0;
  std::string node_id;
  double x = 0;
  double y = 0;
  double start_s = 0;
  std::optional<double> onboard_s;  // empty: never onboarded by t_max
  uint64_t tx_bytes = 0;
  uint32_t subtree = 0;
  std::optional<uint32_t> hops;
};

struct BurdenRow {
  uint32_t subtree = 0;
  double mean_kib = 0;
  double sem_kib = 0;
  uint32_t count = 0;
};

struct PmfRow {
  std::string kind;  // "subtree" or "hops"
  uint32_t value = 0;
  uint32_t count = 0;
  double probability = 0;
};

// Reduction of one run's metrics log (or of several runs pooled).
// Aggregates are pure functions of the node rows.
struct RunReport {
  uint64_t seed = 0;
  uint32_t node_total = 0;      // standard nodes in play
  uint32_t onboarded = 0;
  std::optional<double> convergence_s;   // last successful onboarding
  std::optional<double> mean_onboard_s;  // mean per-node onboarding time
  std::vector<NodeRow> nodes;

  std::vector<std::pair<double, double>> ecdf;  // (time, cumulative fraction)
  std::vector<BurdenRow> burden_by_subtree;
  std::vector<PmfRow> pmf;
  double mean_burden_kib = 0;
  double median_hops = 0;
  double frac_zero_children = 0;
  double frac_one_hop = 0;
  uint64_t trace_hash = 0;
};

RunReport reduce(const proto::Island& island, uint64_t seed);
// Pools node rows across runs and recomputes the aggregates.
RunReport merge_reports(const std::vector<RunReport>& runs);

// CSV artifacts (nodes.csv, ecdf.csv, burden_by_subtree.csv, pmf.csv,
// summary.csv) written into `dir`, overwriting byte-for-byte
// reproducibly for identical reports.
void write_report_csv(const RunReport& report, const std::string& dir);
std::string render_trace(const proto::Island& island);

// Least-squares fit of burden (KiB) against subtree size over the
// per-size means; used for the overhead-trend analysis.
struct LinearFit {
  double slope = 0;
  double intercept = 0;
  double r_squared = 0;
};
std::optional<LinearFit> fit_burden_trend(const RunReport& report);

}  // namespace laser::scn
