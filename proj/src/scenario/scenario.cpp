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

#include "scenario/scenario.hpp"

namespace laser::scn {

std::unique_ptr<proto::Island> generate(const RunConfig& config, uint64_t seed) {
  proto::IslandConfig island_cfg;
  island_cfg.radio = config.radio;
  island_cfg.protocol = config.protocol;
  island_cfg.t_max_s = config.t_max_s;
  island_cfg.medium = proto::IslandConfig::MediumKind::Radio;

  auto island = std::make_unique<proto::Island>(island_cfg, seed);

  sim::Position anchor_pos;
  anchor_pos.x = config.anchor_x >= 0 ? config.anchor_x : config.area_m / 2.0;
  anchor_pos.y = config.anchor_y >= 0 ? config.anchor_y : config.area_m / 2.0;
  island->add_anchor("an0", "im0", anchor_pos);

  for (uint32_t i = 1; i <= config.n_nodes; ++i) {
    sim::Position pos;
    pos.x = island->rng().uniform(0.0, config.area_m);
    pos.y = island->rng().uniform(0.0, config.area_m);
    double start_s = island->rng().exponential(config.start_mean_s);
    island->add_node("n" + std::to_string(i), pos, start_s);
  }
  return island;
}

}  // namespace laser::scn
