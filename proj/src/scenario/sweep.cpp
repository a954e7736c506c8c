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

#include "scenario/sweep.hpp"

#include <atomic>
#include <filesystem>
#include <thread>

#include "scenario/svg.hpp"

namespace laser::scn {

RunReport execute_run(const RunConfig& config, uint64_t seed) {
  auto island = generate(config, seed);
  island->run();
  return reduce(*island, seed);
}

SweepResult run_sweep(const RunConfig& config, uint64_t seed_first, uint64_t seed_last,
                      unsigned jobs, const std::string& outdir, bool emit_svg) {
  namespace fs = std::filesystem;
  if (seed_last < seed_first) {
    throw ConfigError("seed range is empty");
  }
  size_t n_runs = static_cast<size_t>(seed_last - seed_first + 1);
  SweepResult result;
  result.runs.resize(n_runs);

  std::vector<fs::path> run_dirs(n_runs);
  for (size_t i = 0; i < n_runs; ++i) {
    run_dirs[i] = fs::path(outdir) / ("run_" + std::to_string(seed_first + i));
    fs::create_directories(run_dirs[i]);
  }

  unsigned workers = std::max(1u, jobs);
  workers = static_cast<unsigned>(std::min<size_t>(workers, n_runs));
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= n_runs) {
          return;
        }
        result.runs[i] = execute_run(config, seed_first + i);
        write_report_csv(result.runs[i], run_dirs[i].string());
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }

  result.merged = merge_reports(result.runs);
  fs::path merged_dir = fs::path(outdir) / "merged";
  write_report_csv(result.merged, merged_dir.string());
  if (emit_svg) {
    write_ecdf_svg(result.merged, (merged_dir / "ecdf.svg").string());
    write_pmf_svg(result.merged, (merged_dir / "pmf.svg").string());
  }
  return result;
}

}  // namespace laser::scn
