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

#include <cstdint>
#include <string>
#include <vector>

#include "util/bytes.hpp"

namespace laser::sim {

enum class LogKind : uint8_t {
  NodeStart,
  Onboarded,
  FrameTx,
  CsmaDrop,
  InterestForward,
  PacketDrop,
  ReassemblyExpired,
  ImRequest,
  ImResponse,
};

const char* log_kind_name(LogKind kind);

// One record in the append-only run log. Field use by kind:
//   NodeStart:        node
//   Onboarded:        node, peer = parent node (-1 for anchor child? never),
//                     size = hop distance, note = anchor id
//   FrameTx:          node, size = octets on the air
//   CsmaDrop:         node, size = octets abandoned
//   InterestForward:  node, note = interest name URI
//   PacketDrop:       node, note = reason
//   ReassemblyExpired: node
//   ImRequest/ImResponse: node = manager host, peer = subject node,
//                     note = message verb
struct LogRecord {
  uint64_t t_ns = 0;
  LogKind kind = LogKind::NodeStart;
  int32_t node = -1;
  int32_t peer = -1;
  uint64_t size = 0;
  std::string note;
};

// Append-only record stream produced by a run; reduction to reports and
// CSV serialization happen elsewhere.
class MetricsLog {
 public:
  void append(LogRecord rec) { records_.push_back(std::move(rec)); }
  const std::vector<LogRecord>& records() const { return records_; }

  std::string render_trace() const;
  uint64_t trace_hash() const;

 private:
  std::vector<LogRecord> records_;
};

}  // namespace laser::sim
