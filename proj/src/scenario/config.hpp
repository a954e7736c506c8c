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

#include <stdexcept>
#include <string>

#include "laser/params.hpp"
#include "netsim/medium.hpp"

namespace laser::scn {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One experiment configuration: node deployment, arrival process, radio
// constants, and protocol timers. Parsed from `key = value` text with
// `#` comments. Radio constants and the deployment size are required;
// everything else has defaults.
struct RunConfig {
  uint32_t n_nodes = 0;
  double area_m = 0.0;
  double anchor_x = -1.0;  // < 0 means "center of the area"
  double anchor_y = -1.0;
  double start_mean_s = 120.0;
  double t_max_s = 1200.0;

  sim::RadioParams radio;
  proto::Params protocol;

  double density_per_km2() const {
    double km2 = (area_m / 1000.0) * (area_m / 1000.0);
    return n_nodes / km2;
  }
};

// Throws ConfigError naming the offending key.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace laser::scn
