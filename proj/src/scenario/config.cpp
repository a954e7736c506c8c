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

#include "scenario/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace laser::scn {

namespace {

std::string trim(const std::string& s) {
  size_t first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return {};
  }
  size_t last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    double v = std::stod(value, &pos);
    if (pos != value.size()) {
      throw std::invalid_argument(value);
    }
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid value for key: " + key);
  }
}

uint64_t to_uint(const std::string& key, const std::string& value) {
  uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("invalid value for key: " + key);
  }
  return v;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t comment = line.find('#');
    if (comment != std::string::npos) {
      line = line.substr(0, comment);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    if (!kv.emplace(key, value).second) {
      throw ConfigError("duplicate key: " + key);
    }
  }

  RunConfig cfg;
  auto take = [&](const char* key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) {
      return std::nullopt;
    }
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  auto require = [&](const char* key) -> std::string {
    auto v = take(key);
    if (!v) {
      throw ConfigError(std::string("missing required key: ") + key);
    }
    return *v;
  };

  cfg.n_nodes = static_cast<uint32_t>(to_uint("n_nodes", require("n_nodes")));
  if (cfg.n_nodes == 0) {
    throw ConfigError("n_nodes must be positive");
  }
  cfg.area_m = to_double("area_m", require("area_m"));
  if (cfg.area_m <= 0) {
    throw ConfigError("area_m must be positive");
  }
  cfg.radio.path_loss_exponent =
      to_double("path_loss_exponent", require("path_loss_exponent"));
  cfg.radio.ref_loss_db = to_double("ref_loss_db", require("ref_loss_db"));
  cfg.radio.tx_power_dbm = to_double("tx_power_dbm", require("tx_power_dbm"));
  cfg.radio.rx_sensitivity_dbm =
      to_double("rx_sensitivity_dbm", require("rx_sensitivity_dbm"));

  if (auto v = take("anchor_x")) cfg.anchor_x = to_double("anchor_x", *v);
  if (auto v = take("anchor_y")) cfg.anchor_y = to_double("anchor_y", *v);
  if (auto v = take("start_mean_s")) cfg.start_mean_s = to_double("start_mean_s", *v);
  if (auto v = take("t_max_s")) cfg.t_max_s = to_double("t_max_s", *v);
  if (auto v = take("bitrate_bps")) cfg.radio.bitrate_bps = to_uint("bitrate_bps", *v);
  if (auto v = take("mtu_payload")) {
    cfg.radio.mtu_payload = static_cast<size_t>(to_uint("mtu_payload", *v));
  }
  if (auto v = take("frame_overhead")) {
    cfg.radio.frame_overhead = static_cast<size_t>(to_uint("frame_overhead", *v));
  }

  proto::Params& p = cfg.protocol;
  if (auto v = take("pbkdf2_iters")) {
    p.kdf_iterations = static_cast<unsigned>(to_uint("pbkdf2_iters", *v));
  }
  if (auto v = take("pit_lifetime_s")) p.pit_lifetime_s = to_double("pit_lifetime_s", *v);
  if (auto v = take("discover_pit_lifetime_s")) {
    p.discover_pit_lifetime_s = to_double("discover_pit_lifetime_s", *v);
  }
  if (auto v = take("discover_retry_s")) {
    p.discover_retry_s = to_double("discover_retry_s", *v);
  }
  if (auto v = take("max_extra_rounds")) {
    p.max_extra_rounds = static_cast<int>(to_uint("max_extra_rounds", *v));
  }
  if (auto v = take("commit_quiet_s")) p.commit_quiet_s = to_double("commit_quiet_s", *v);
  if (auto v = take("relay_jitter_s")) p.relay_jitter_s = to_double("relay_jitter_s", *v);
  if (auto v = take("request_retry_s")) {
    p.request_retry_s = to_double("request_retry_s", *v);
  }
  if (auto v = take("request_max_retries")) {
    p.request_max_retries = static_cast<int>(to_uint("request_max_retries", *v));
  }
  if (auto v = take("wakeup_jitter_s")) {
    p.wakeup_jitter_s = to_double("wakeup_jitter_s", *v);
  }
  if (auto v = take("rak_grace_s")) p.rak_grace_s = to_double("rak_grace_s", *v);
  if (auto v = take("session_lifetime_s")) {
    p.session_lifetime_s = to_double("session_lifetime_s", *v);
  }
  if (auto v = take("rak_refresh_s")) p.rak_refresh_s = to_double("rak_refresh_s", *v);
  if (auto v = take("cs_capacity")) {
    p.cs_capacity = static_cast<size_t>(to_uint("cs_capacity", *v));
  }

  if (!kv.empty()) {
    throw ConfigError("unknown key: " + kv.begin()->first);
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open config file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace laser::scn
