/*
 * Copyright 2026 the laser-ndn authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the onboarding/routing simulator. Handles are opaque;
 * every entry point returns a status code, and laser_last_error() gives
 * a human-readable message for the most recent failure on this thread.
 */

#ifndef LASER_LASER_H
#define LASER_LASER_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
#define LASER_API extern "C" __attribute__((visibility("default")))
#else
#define LASER_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum laser_status {
  LASER_OK = 0,
  LASER_ERR_ARGUMENT = 1, /* null handle or bad parameter */
  LASER_ERR_CONFIG = 2,   /* unreadable or invalid configuration */
  LASER_ERR_IO = 3,       /* cannot write an output artifact */
  LASER_ERR_SIM = 4       /* simulation failed to execute */
} laser_status;

/* An experiment configuration (scenario, radio, protocol timers). */
typedef struct laser_config laser_config;
/* The reduced outcome of one finished run. */
typedef struct laser_report laser_report;

#ifdef __cplusplus
}
#endif

LASER_API const char* laser_version(void);

/* Message for the most recent failure on the calling thread. */
LASER_API const char* laser_last_error(void);

LASER_API laser_status laser_config_load(const char* path, laser_config** out);
LASER_API laser_status laser_config_parse(const char* text, laser_config** out);
LASER_API void laser_config_free(laser_config* config);

/* Validates a config file; on failure the diagnostic (naming the bad or
 * missing key) is copied into `message` when provided. */
LASER_API laser_status laser_config_check_file(const char* path, char* message,
                                               size_t message_cap);

/* Executes one run to completion. The report must be freed. */
LASER_API laser_status laser_run(const laser_config* config, uint64_t seed,
                                 laser_report** out);

/* Runs seeds [seed_first, seed_last], writing run_<seed>/ directories and
 * merged/ aggregates under outdir. `jobs` = 0 uses one worker per core. */
LASER_API laser_status laser_sweep(const laser_config* config, uint64_t seed_first,
                                   uint64_t seed_last, unsigned jobs,
                                   const char* outdir, int emit_svg);

LASER_API laser_status laser_report_write_csv(const laser_report* report,
                                              const char* dir);
/* Writes the event trace; path "-" streams to stdout. */
LASER_API laser_status laser_report_write_trace(const laser_report* report,
                                                const char* path);
LASER_API laser_status laser_report_write_svg(const laser_report* report,
                                              const char* dir);

LASER_API uint32_t laser_report_node_count(const laser_report* report);
LASER_API uint32_t laser_report_onboarded(const laser_report* report);
/* Time of the last successful onboarding in seconds; negative when no
 * node onboarded. */
LASER_API double laser_report_convergence_s(const laser_report* report);
/* Mean per-node onboarding time in seconds; negative when no node
 * onboarded. */
LASER_API double laser_report_mean_onboard_s(const laser_report* report);
LASER_API double laser_report_mean_burden_kib(const laser_report* report);
LASER_API double laser_report_median_hops(const laser_report* report);
LASER_API uint64_t laser_report_trace_hash(const laser_report* report);
LASER_API void laser_report_free(laser_report* report);

#endif /* LASER_LASER_H */
