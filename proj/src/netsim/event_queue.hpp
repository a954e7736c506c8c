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
#include <functional>
#include <queue>
#include <vector>

namespace laser::sim {

// Discrete-event queue. Events fire in nondecreasing time order; ties are
// broken by insertion sequence, which keeps runs bit-reproducible.
class EventQueue {
 public:
  using Fn = std::function<void()>;

  void at(uint64_t t_ns, Fn fn) {
    if (t_ns < now_) {
      t_ns = now_;
    }
    heap_.push(Event{t_ns, seq_++, std::move(fn)});
  }

  void after(uint64_t delay_ns, Fn fn) { at(now_ + delay_ns, std::move(fn)); }

  bool empty() const { return heap_.empty(); }
  uint64_t now_ns() const { return now_; }
  uint64_t next_time_ns() const { return heap_.top().t_ns; }

  // Pops and runs the earliest event; returns false when drained.
  bool run_one() {
    if (heap_.empty()) {
      return false;
    }
    Event ev = heap_.top();
    heap_.pop();
    now_ = ev.t_ns;
    ev.fn();
    return true;
  }

 private:
  struct Event {
    uint64_t t_ns;
    uint64_t seq;
    Fn fn;
    bool operator>(const Event& o) const {
      return t_ns != o.t_ns ? t_ns > o.t_ns : seq > o.seq;
    }
  };

  std::priority_queue<Event, std::vector<Event>, std::greater<Event>> heap_;
  uint64_t now_ = 0;
  uint64_t seq_ = 0;
};

constexpr uint64_t seconds_to_ns(double s) {
  return static_cast<uint64_t>(s * 1e9);
}
constexpr double ns_to_seconds(uint64_t ns) { return static_cast<double>(ns) / 1e9; }

}  // namespace laser::sim
