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

#include "laser/laser.h"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <thread>

#include "scenario/report.hpp"
#include "scenario/svg.hpp"
#include "scenario/sweep.hpp"

using laser::scn::ConfigError;
using laser::scn::RunConfig;
using laser::scn::RunReport;

struct laser_config {
  RunConfig config;
};

struct laser_report {
  RunReport report;
  std::string trace;
};

namespace {

thread_local std::string g_last_error;

laser_status fail(laser_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
laser_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    return fail(LASER_ERR_CONFIG, e.what());
  } catch (const std::exception& e) {
    return fail(LASER_ERR_SIM, e.what());
  }
}

}  // namespace

const char* laser_version(void) { return "1.0.0"; }

const char* laser_last_error(void) { return g_last_error.c_str(); }

laser_status laser_config_load(const char* path, laser_config** out) {
  if (path == nullptr || out == nullptr) {
    return fail(LASER_ERR_ARGUMENT, "null argument");
  }
  return guarded([&]() {
    auto handle = std::make_unique<laser_config>();
    handle->config = laser::scn::load_config(path);
    *out = handle.release();
    return LASER_OK;
  });
}

laser_status laser_config_parse(const char* text, laser_config** out) {
  if (text == nullptr || out == nullptr) {
    return fail(LASER_ERR_ARGUMENT, "null argument");
  }
  return guarded([&]() {
    auto handle = std::make_unique<laser_config>();
    handle->config = laser::scn::parse_config(text);
    *out = handle.release();
    return LASER_OK;
  });
}

void laser_config_free(laser_config* config) { delete config; }

laser_status laser_config_check_file(const char* path, char* message,
                                     size_t message_cap) {
  if (path == nullptr) {
    return fail(LASER_ERR_ARGUMENT, "null argument");
  }
  laser_config* cfg = nullptr;
  laser_status status = laser_config_load(path, &cfg);
  laser_config_free(cfg);
  if (status != LASER_OK && message != nullptr && message_cap > 0) {
    std::strncpy(message, g_last_error.c_str(), message_cap - 1);
    message[message_cap - 1] = '\0';
  }
  return status;
}

laser_status laser_run(const laser_config* config, uint64_t seed, laser_report** out) {
  if (config == nullptr || out == nullptr) {
    return fail(LASER_ERR_ARGUMENT, "null argument");
  }
  return guarded([&]() {
    auto island = laser::scn::generate(config->config, seed);
    island->run();
    auto handle = std::make_unique<laser_report>();
    handle->report = laser::scn::reduce(*island, seed);
    handle->trace = laser::scn::render_trace(*island);
    *out = handle.release();
    return LASER_OK;
  });
}

laser_status laser_sweep(const laser_config* config, uint64_t seed_first,
                         uint64_t seed_last, unsigned jobs, const char* outdir,
                         int emit_svg) {
  if (config == nullptr || outdir == nullptr) {
    return fail(LASER_ERR_ARGUMENT, "null argument");
  }
  if (seed_last < seed_first) {
    return fail(LASER_ERR_ARGUMENT, "seed range is empty");
  }
  return guarded([&]() {
    unsigned workers = jobs != 0 ? jobs : std::max(1u, std::thread::hardware_concurrency());
    laser::scn::run_sweep(config->config, seed_first, seed_last, workers, outdir,
                          emit_svg != 0);
    return LASER_OK;
  });
}

laser_status laser_report_write_csv(const laser_report* report, const char* dir) {
  if (report == nullptr || dir == nullptr) {
    return fail(LASER_ERR_ARGUMENT, "null argument");
  }
  return guarded([&]() {
    laser::scn::write_report_csv(report->report, dir);
    return LASER_OK;
  });
}

laser_status laser_report_write_trace(const laser_report* report, const char* path) {
  if (report == nullptr || path == nullptr) {
    return fail(LASER_ERR_ARGUMENT, "null argument");
  }
  if (std::strcmp(path, "-") == 0) {
    std::fwrite(report->trace.data(), 1, report->trace.size(), stdout);
    return LASER_OK;
  }
  std::ofstream out(path, std::ios::trunc | std::ios::binary);
  if (!out) {
    return fail(LASER_ERR_IO, std::string("cannot open for writing: ") + path);
  }
  out << report->trace;
  return LASER_OK;
}

laser_status laser_report_write_svg(const laser_report* report, const char* dir) {
  if (report == nullptr || dir == nullptr) {
    return fail(LASER_ERR_ARGUMENT, "null argument");
  }
  return guarded([&]() {
    std::filesystem::create_directories(dir);
    laser::scn::write_ecdf_svg(report->report,
                               (std::filesystem::path(dir) / "ecdf.svg").string());
    laser::scn::write_pmf_svg(report->report,
                              (std::filesystem::path(dir) / "pmf.svg").string());
    return LASER_OK;
  });
}

uint32_t laser_report_node_count(const laser_report* report) {
  return report ? report->report.node_total : 0;
}

uint32_t laser_report_onboarded(const laser_report* report) {
  return report ? report->report.onboarded : 0;
}

double laser_report_convergence_s(const laser_report* report) {
  if (report == nullptr || !report->report.convergence_s) {
    return -1.0;
  }
  return *report->report.convergence_s;
}

double laser_report_mean_onboard_s(const laser_report* report) {
  if (report == nullptr || !report->report.mean_onboard_s) {
    return -1.0;
  }
  return *report->report.mean_onboard_s;
}

double laser_report_mean_burden_kib(const laser_report* report) {
  return report ? report->report.mean_burden_kib : 0.0;
}

double laser_report_median_hops(const laser_report* report) {
  return report ? report->report.median_hops : 0.0;
}

uint64_t laser_report_trace_hash(const laser_report* report) {
  return report ? report->report.trace_hash : 0;
}

void laser_report_free(laser_report* report) { delete report; }
