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

#include "scenario/report.hpp"

namespace laser::scn {

// Executes one run to completion and reduces it.
RunReport execute_run(const RunConfig& config, uint64_t seed);

// Runs [seed_first, seed_last] (fanning out over `jobs` workers), writes
// each run's CSVs into <outdir>/run_<seed>/ and the pooled aggregates
// into <outdir>/merged/. Runs are independent; reduction is sequential
// and ordered by seed, so outputs do not depend on scheduling.
struct SweepResult {
  std::vector<RunReport> runs;
  RunReport merged;
};
SweepResult run_sweep(const RunConfig& config, uint64_t seed_first, uint64_t seed_last,
                      unsigned jobs, const std::string& outdir, bool emit_svg);

}  // namespace laser::scn
