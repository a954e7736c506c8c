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

#include <memory>

#include "laser/island.hpp"
#include "scenario/config.hpp"

namespace laser::scn {

// Builds the simulation world for one (config, seed) pair: an anchor
// (hosting the manager) at the configured position, standard nodes
// placed uniformly at random in the square, and power-on times drawn
// i.i.d. from an exponential distribution.
std::unique_ptr<proto::Island> generate(const RunConfig& config, uint64_t seed);

}  // namespace laser::scn
