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

#include "netsim/metrics.hpp"

#include <cstdio>

namespace laser::sim {

const char* log_kind_name(LogKind kind) {
  switch (kind) {
    case LogKind::NodeStart: return "node-start";
    case LogKind::Onboarded: return "onboarded";
    case LogKind::FrameTx: return "frame-tx";
    case LogKind::CsmaDrop: return "csma-drop";
    case LogKind::InterestForward: return "interest-fwd";
    case LogKind::PacketDrop: return "packet-drop";
    case LogKind::ReassemblyExpired: return "reassembly-expired";
    case LogKind::ImRequest: return "im-request";
    case LogKind::ImResponse: return "im-response";
  }
  return "unknown";
}

std::string MetricsLog::render_trace() const {
  std::string out;
  char line[256];
  for (const auto& r : records_) {
    int n = std::snprintf(line, sizeof(line), "%llu.%09llu %s node=%d peer=%d size=%llu",
                          static_cast<unsigned long long>(r.t_ns / 1000000000ull),
                          static_cast<unsigned long long>(r.t_ns % 1000000000ull),
                          log_kind_name(r.kind), r.node, r.peer,
                          static_cast<unsigned long long>(r.size));
    out.append(line, static_cast<size_t>(n));
    if (!r.note.empty()) {
      out.push_back(' ');
      out.append(r.note);
    }
    out.push_back('\n');
  }
  return out;
}

uint64_t MetricsLog::trace_hash() const { return fnv1a(render_trace()); }

}  // namespace laser::sim
