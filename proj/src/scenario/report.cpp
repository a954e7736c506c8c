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

#include "scenario/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

namespace laser::scn {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

void compute_aggregates(RunReport& report) {
  report.onboarded = 0;
  std::vector<double> onboard_times;
  std::map<uint32_t, std::vector<double>> burden_groups;  // subtree -> KiB values
  std::map<uint32_t, uint32_t> subtree_hist;
  std::map<uint32_t, uint32_t> hop_hist;
  std::vector<uint32_t> hop_values;
  double burden_total_kib = 0;
  uint32_t zero_children = 0;
  uint32_t one_hop = 0;
  std::optional<double> last_onboard;

  for (const NodeRow& row : report.nodes) {
    if (!row.onboard_s) {
      continue;
    }
    ++report.onboarded;
    onboard_times.push_back(*row.onboard_s);
    if (!last_onboard || *row.onboard_s > *last_onboard) {
      last_onboard = row.onboard_s;
    }
    double kib = static_cast<double>(row.tx_bytes) / 1024.0;
    burden_groups[row.subtree].push_back(kib);
    burden_total_kib += kib;
    subtree_hist[row.subtree] += 1;
    if (row.hops) {
      hop_hist[*row.hops] += 1;
      hop_values.push_back(*row.hops);
    }
    if (row.subtree == 0) {
      ++zero_children;
    }
    if (row.hops && *row.hops == 1) {
      ++one_hop;
    }
  }

  report.convergence_s = last_onboard;
  report.mean_onboard_s.reset();
  if (!onboard_times.empty()) {
    double sum = 0;
    for (double t : onboard_times) sum += t;
    report.mean_onboard_s = sum / onboard_times.size();
  }
  report.ecdf.clear();
  std::sort(onboard_times.begin(), onboard_times.end());
  for (size_t i = 0; i < onboard_times.size(); ++i) {
    report.ecdf.emplace_back(onboard_times[i],
                             static_cast<double>(i + 1) / onboard_times.size());
  }

  report.burden_by_subtree.clear();
  for (const auto& [subtree, values] : burden_groups) {
    BurdenRow row;
    row.subtree = subtree;
    row.count = static_cast<uint32_t>(values.size());
    double sum = 0;
    for (double v : values) sum += v;
    row.mean_kib = sum / values.size();
    double var = 0;
    for (double v : values) var += (v - row.mean_kib) * (v - row.mean_kib);
    if (values.size() > 1) {
      var /= (values.size() - 1);
      row.sem_kib = std::sqrt(var / values.size());
    }
    report.burden_by_subtree.push_back(row);
  }

  report.pmf.clear();
  for (const auto& [value, count] : subtree_hist) {
    report.pmf.push_back({"subtree", value, count,
                          static_cast<double>(count) / report.onboarded});
  }
  for (const auto& [value, count] : hop_hist) {
    report.pmf.push_back(
        {"hops", value, count, static_cast<double>(count) / report.onboarded});
  }

  report.mean_burden_kib =
      report.onboarded > 0 ? burden_total_kib / report.onboarded : 0;
  report.frac_zero_children =
      report.onboarded > 0 ? static_cast<double>(zero_children) / report.onboarded : 0;
  report.frac_one_hop =
      report.onboarded > 0 ? static_cast<double>(one_hop) / report.onboarded : 0;
  std::sort(hop_values.begin(), hop_values.end());
  if (!hop_values.empty()) {
    size_t n = hop_values.size();
    report.median_hops = (n % 2 == 1)
                             ? hop_values[n / 2]
                             : (hop_values[n / 2 - 1] + hop_values[n / 2]) / 2.0;
  }
}

}  // namespace

RunReport reduce(const proto::Island& island, uint64_t seed) {
  RunReport report;
  report.seed = seed;
  report.trace_hash = island.log().trace_hash();

  int anchor = island.anchor_index();
  size_t total = island.node_count();
  report.node_total = static_cast<uint32_t>(total - 1);

  struct OnboardInfo {
    double t_s;
    int32_t parent;
    uint32_t hops;
  };
  std::vector<std::optional<OnboardInfo>> onboard(total);
  std::vector<uint64_t> tx_bytes(total, 0);

  for (const auto& rec : island.log().records()) {
    switch (rec.kind) {
      case sim::LogKind::Onboarded:
        onboard[rec.node] = OnboardInfo{sim::ns_to_seconds(rec.t_ns), rec.peer,
                                        static_cast<uint32_t>(rec.size)};
        break;
      case sim::LogKind::FrameTx:
        tx_bytes[rec.node] += rec.size;
        break;
      default:
        break;
    }
  }

  // Subtree sizes: every onboarded node contributes one to each ancestor
  // on its path to the anchor.
  std::vector<uint32_t> subtree(total, 0);
  for (size_t i = 0; i < total; ++i) {
    if (static_cast<int>(i) == anchor || !onboard[i]) {
      continue;
    }
    int32_t parent = onboard[i]->parent;
    size_t guard = 0;
    while (parent >= 0 && parent != anchor && guard++ < total) {
      if (!onboard[parent]) {
        break;
      }
      subtree[parent] += 1;
      parent = onboard[parent]->parent;
    }
  }

  for (size_t i = 0; i < total; ++i) {
    if (static_cast<int>(i) == anchor) {
      continue;
    }
    NodeRow row;
    row.run_id = seed;
    row.node_id = island.node(static_cast<int>(i)).id();
    row.x = island.position_of(static_cast<int>(i)).x;
    row.y = island.position_of(static_cast<int>(i)).y;
    row.start_s = island.start_time_s(static_cast<int>(i));
    row.tx_bytes = tx_bytes[i];
    row.subtree = subtree[i];
    if (onboard[i]) {
      row.onboard_s = onboard[i]->t_s;
      row.hops = onboard[i]->hops;
    }
    report.nodes.push_back(std::move(row));
  }

  compute_aggregates(report);
  return report;
}

RunReport merge_reports(const std::vector<RunReport>& runs) {
  RunReport merged;
  if (runs.empty()) {
    return merged;
  }
  merged.seed = runs.front().seed;
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (const RunReport& run : runs) {
    merged.node_total += run.node_total;
    for (const NodeRow& row : run.nodes) {
      merged.nodes.push_back(row);
    }
    hash ^= run.trace_hash;
    hash *= 0x100000001b3ULL;
  }
  merged.trace_hash = hash;
  compute_aggregates(merged);
  return merged;
}

void write_report_csv(const RunReport& report, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);

  {
    std::ofstream out(fs::path(dir) / "nodes.csv", std::ios::trunc);
    out << "run_id,node_id,x,y,start_s,onboard_s,tx_bytes,subtree,hops\n";
    for (const NodeRow& row : report.nodes) {
      out << row.run_id << ',' << row.node_id << ',' << fmt(row.x) << ',' << fmt(row.y)
          << ',' << fmt(row.start_s) << ','
          << (row.onboard_s ? fmt(*row.onboard_s) : std::string()) << ',' << row.tx_bytes
          << ',' << row.subtree << ','
          << (row.hops ? std::to_string(*row.hops) : std::string()) << '\n';
    }
  }
  {
    std::ofstream out(fs::path(dir) / "ecdf.csv", std::ios::trunc);
    out << "t_s,fraction\n";
    for (const auto& [t, f] : report.ecdf) {
      out << fmt(t) << ',' << fmt(f) << '\n';
    }
  }
  {
    std::ofstream out(fs::path(dir) / "burden_by_subtree.csv", std::ios::trunc);
    out << "subtree,mean_kib,sem_kib,count\n";
    for (const BurdenRow& row : report.burden_by_subtree) {
      out << row.subtree << ',' << fmt(row.mean_kib) << ',' << fmt(row.sem_kib) << ','
          << row.count << '\n';
    }
  }
  {
    std::ofstream out(fs::path(dir) / "pmf.csv", std::ios::trunc);
    out << "kind,value,count,probability\n";
    for (const PmfRow& row : report.pmf) {
      out << row.kind << ',' << row.value << ',' << row.count << ','
          << fmt(row.probability) << '\n';
    }
  }
  {
    std::ofstream out(fs::path(dir) / "summary.csv", std::ios::trunc);
    out << "run_id,node_total,onboarded,convergence_s,mean_onboard_s,mean_burden_kib,"
           "median_hops,frac_zero_children,frac_one_hop,trace_hash\n";
    out << report.seed << ',' << report.node_total << ',' << report.onboarded << ','
        << (report.convergence_s ? fmt(*report.convergence_s) : std::string()) << ','
        << (report.mean_onboard_s ? fmt(*report.mean_onboard_s) : std::string()) << ','
        << fmt(report.mean_burden_kib) << ',' << fmt(report.median_hops) << ','
        << fmt(report.frac_zero_children) << ',' << fmt(report.frac_one_hop) << ','
        << report.trace_hash << '\n';
  }
}

std::string render_trace(const proto::Island& island) {
  return island.log().render_trace();
}

std::optional<LinearFit> fit_burden_trend(const RunReport& report) {
  const auto& rows = report.burden_by_subtree;
  if (rows.size() < 2) {
    return std::nullopt;
  }
  double n = static_cast<double>(rows.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const BurdenRow& row : rows) {
    double x = row.subtree;
    double y = row.mean_kib;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-12) {
    return std::nullopt;
  }
  LinearFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;

  double mean_y = sy / n;
  double ss_tot = 0, ss_res = 0;
  for (const BurdenRow& row : rows) {
    double pred = fit.slope * row.subtree + fit.intercept;
    ss_tot += (row.mean_kib - mean_y) * (row.mean_kib - mean_y);
    ss_res += (row.mean_kib - pred) * (row.mean_kib - pred);
  }
  fit.r_squared = ss_tot > 1e-12 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

}  // namespace laser::scn
