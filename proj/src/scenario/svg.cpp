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

#include "scenario/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace laser::scn {

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 400;
constexpr int kMargin = 50;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

void svg_header(std::ofstream& out, const char* title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n"
      << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\""
      << kWidth - kMargin << "\" y2=\"" << kHeight - kMargin
      << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin
      << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n";
}

}  // namespace

void write_ecdf_svg(const RunReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  svg_header(out, "onboarding time eCDF");
  if (!report.ecdf.empty()) {
    double t_max = report.ecdf.back().first;
    if (t_max <= 0) {
      t_max = 1;
    }
    double plot_w = kWidth - 2 * kMargin;
    double plot_h = kHeight - 2 * kMargin;
    out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
    double prev_y = kHeight - kMargin;
    for (const auto& [t, f] : report.ecdf) {
      double x = kMargin + t / t_max * plot_w;
      double y = kHeight - kMargin - f * plot_h;
      out << num(x) << ',' << num(prev_y) << ' ' << num(x) << ',' << num(y) << ' ';
      prev_y = y;
    }
    out << "\"/>\n";
    out << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - kMargin + 16
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << num(t_max) << " s</text>\n";
  }
  out << "</svg>\n";
}

void write_pmf_svg(const RunReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  svg_header(out, "subtree size PMF");
  std::vector<const PmfRow*> rows;
  for (const PmfRow& row : report.pmf) {
    if (row.kind == "subtree") {
      rows.push_back(&row);
    }
  }
  if (!rows.empty()) {
    uint32_t v_max = 0;
    double p_max = 0;
    for (const PmfRow* row : rows) {
      v_max = std::max(v_max, row->value);
      p_max = std::max(p_max, row->probability);
    }
    double plot_w = kWidth - 2 * kMargin;
    double plot_h = kHeight - 2 * kMargin;
    double bar_w = plot_w / (v_max + 2);
    for (const PmfRow* row : rows) {
      double h = p_max > 0 ? row->probability / p_max * plot_h : 0;
      double x = kMargin + row->value * bar_w + bar_w * 0.1;
      double y = kHeight - kMargin - h;
      out << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\""
          << num(bar_w * 0.8) << "\" height=\"" << num(h)
          << "\" fill=\"darkseagreen\"/>\n";
      out << "<text x=\"" << num(x + bar_w * 0.4) << "\" y=\""
          << kHeight - kMargin + 14
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">"
          << row->value << "</text>\n";
    }
  }
  out << "</svg>\n";
}

}  // namespace laser::scn
