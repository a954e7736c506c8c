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

// Operator front end for the simulator. Talks to the core exclusively
// through the C API in laser/laser.h.
//
// Exit codes: 0 success, 2 configuration error, 3 simulation/output error.

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "laser/laser.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitSim = 3;

std::string default_out_root() {
  const char* env = std::getenv("LASER_OUT_ROOT");
  return env != nullptr && *env != '\0' ? env : "out";
}

std::string stem_of(const std::string& path) {
  size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  size_t dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

int status_to_exit(laser_status status) {
  switch (status) {
    case LASER_OK:
      return kExitOk;
    case LASER_ERR_CONFIG:
    case LASER_ERR_ARGUMENT:
      return kExitConfig;
    default:
      return kExitSim;
  }
}

struct ConfigHandle {
  laser_config* ptr = nullptr;
  ~ConfigHandle() { laser_config_free(ptr); }
};
struct ReportHandle {
  laser_report* ptr = nullptr;
  ~ReportHandle() { laser_report_free(ptr); }
};

int fail(laser_status status) {
  std::fprintf(stderr, "error: %s\n", laser_last_error());
  return status_to_exit(status);
}

bool parse_seed_range(const std::string& text, uint64_t& first, uint64_t& last) {
  size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      first = last = std::stoull(text);
      return true;
    }
    first = std::stoull(text.substr(0, dots));
    last = std::stoull(text.substr(dots + 2));
    return first <= last;
  } catch (const std::exception&) {
    return false;
  }
}

void print_summary(const laser_report* report) {
  double convergence = laser_report_convergence_s(report);
  std::printf("nodes=%u onboarded=%u", laser_report_node_count(report),
              laser_report_onboarded(report));
  if (convergence >= 0) {
    std::printf(" convergence=%.3fs mean_onboard=%.3fs", convergence,
                laser_report_mean_onboard_s(report));
  }
  std::printf(" mean_burden=%.2fKiB median_hops=%.1f trace_hash=%016llx\n",
              laser_report_mean_burden_kib(report), laser_report_median_hops(report),
              (unsigned long long)laser_report_trace_hash(report));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"secure-onboarding island simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string seed_range = "1";
  uint64_t seed = 1;
  unsigned jobs = 0;
  bool emit_svg = false;
  bool verbose = false;

  CLI::App* cmd_run = app.add_subcommand("run", "execute one run and write its CSVs");
  cmd_run->add_option("--config", config_path, "config file")->required();
  cmd_run->add_option("--seed", seed, "PRNG seed");
  cmd_run->add_option("--out", out_dir, "output directory");
  cmd_run->add_flag("--svg", emit_svg, "also emit SVG plots");
  cmd_run->add_flag("-v,--verbose", verbose, "print a run summary");

  CLI::App* cmd_sweep =
      app.add_subcommand("sweep", "run a seed range and merge the aggregates");
  cmd_sweep->add_option("--config", config_path, "config file")->required();
  cmd_sweep->add_option("--seeds", seed_range, "seed range, e.g. 1..20")->required();
  cmd_sweep->add_option("--out", out_dir, "output directory");
  cmd_sweep->add_option("--jobs", jobs, "parallel workers (default: cores)");
  cmd_sweep->add_flag("--svg", emit_svg, "also emit SVG plots");
  cmd_sweep->add_flag("-v,--verbose", verbose, "print progress");

  CLI::App* cmd_trace = app.add_subcommand("trace", "execute one run and dump the trace");
  cmd_trace->add_option("--config", config_path, "config file")->required();
  cmd_trace->add_option("--seed", seed, "PRNG seed");
  cmd_trace->add_option("--out", out_dir, "trace file (default: stdout)");

  CLI::App* cmd_check = app.add_subcommand("check-config", "validate a config file");
  cmd_check->add_option("--config", config_path, "config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  if (cmd_check->parsed()) {
    char message[512] = {0};
    laser_status status = laser_config_check_file(config_path.c_str(), message,
                                                  sizeof(message));
    if (status != LASER_OK) {
      std::fprintf(stderr, "config error: %s\n", message);
      return kExitConfig;
    }
    std::printf("ok: %s\n", config_path.c_str());
    return kExitOk;
  }

  ConfigHandle config;
  laser_status status = laser_config_load(config_path.c_str(), &config.ptr);
  if (status != LASER_OK) {
    return fail(status);
  }

  if (cmd_run->parsed()) {
    if (out_dir.empty()) {
      out_dir = default_out_root() + "/" + stem_of(config_path) + "-seed" +
                std::to_string(seed);
    }
    ReportHandle report;
    status = laser_run(config.ptr, seed, &report.ptr);
    if (status != LASER_OK) {
      return fail(status);
    }
    status = laser_report_write_csv(report.ptr, out_dir.c_str());
    if (status == LASER_OK && emit_svg) {
      status = laser_report_write_svg(report.ptr, out_dir.c_str());
    }
    if (status != LASER_OK) {
      return fail(status);
    }
    if (verbose) {
      print_summary(report.ptr);
    }
    std::printf("wrote %s\n", out_dir.c_str());
    return kExitOk;
  }

  if (cmd_sweep->parsed()) {
    uint64_t first = 0, last = 0;
    if (!parse_seed_range(seed_range, first, last)) {
      std::fprintf(stderr, "error: bad seed range '%s' (expected A or A..B)\n",
                   seed_range.c_str());
      return kExitConfig;
    }
    if (out_dir.empty()) {
      out_dir = default_out_root() + "/" + stem_of(config_path) + "-sweep";
    }
    status = laser_sweep(config.ptr, first, last, jobs, out_dir.c_str(), emit_svg ? 1 : 0);
    if (status != LASER_OK) {
      return fail(status);
    }
    std::printf("wrote %s (seeds %llu..%llu)\n", out_dir.c_str(),
                (unsigned long long)first, (unsigned long long)last);
    return kExitOk;
  }

  if (cmd_trace->parsed()) {
    ReportHandle report;
    status = laser_run(config.ptr, seed, &report.ptr);
    if (status != LASER_OK) {
      return fail(status);
    }
    std::string path = out_dir.empty() ? "-" : out_dir;
    status = laser_report_write_trace(report.ptr, path.c_str());
    if (status != LASER_OK) {
      return fail(status);
    }
    return kExitOk;
  }

  return kExitConfig;
}
