// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "qwalknet/histogram_svg.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qwalknet/errors.hpp"

namespace qwalknet {

namespace {

const char *kPalette[] = {"#c0392b", "#2980b9", "#27ae60", "#8e44ad",
                          "#f39c12", "#16a085"};

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(6);
  out << std::fixed << v;
  return out.str();
}

}  // namespace

std::string histogram_svg(const std::vector<BarSeries> &series,
                          const std::string &title) {
  if (series.empty()) throw UsageError("histogram needs at least one series");
  const std::size_t n_groups = series.front().values.size();
  if (n_groups == 0) throw UsageError("histogram series are empty");
  for (const auto &s : series) {
    if (s.values.size() != n_groups) {
      throw UsageError("histogram series must have equal length");
    }
  }

  double max_v = 0.0;
  for (const auto &s : series) {
    for (double v : s.values) max_v = std::max(max_v, v);
  }
  if (max_v <= 0.0) max_v = 1.0;

  const double width = 640.0, height = 400.0;
  const double left = 50.0, right = 20.0, top = 40.0, bottom = 40.0;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;
  const double group_w = plot_w / n_groups;
  const double bar_w = group_w * 0.8 / series.size();

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  out << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  if (!title.empty()) {
    out << "<text x=\"" << width / 2
        << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"14\">"
        << title << "</text>\n";
  }
  // axes
  out << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\""
      << left + plot_w << "\" y2=\"" << top + plot_h
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left
      << "\" y2=\"" << top + plot_h << "\" stroke=\"black\"/>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char *color = kPalette[s % 6];
    for (std::size_t g = 0; g < n_groups; ++g) {
      const double v = series[s].values[g];
      const double h = plot_h * (v / max_v);
      const double x =
          left + g * group_w + group_w * 0.1 + s * bar_w;
      const double y = top + plot_h - h;
      out << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" width=\""
          << fmt(bar_w) << "\" height=\"" << fmt(h) << "\" fill=\"" << color
          << "\"/>\n";
    }
  }
  for (std::size_t g = 0; g < n_groups; ++g) {
    out << "<text x=\"" << fmt(left + (g + 0.5) * group_w) << "\" y=\""
        << fmt(top + plot_h + 16)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << g << "</text>\n";
  }
  // legend
  for (std::size_t s = 0; s < series.size(); ++s) {
    const double y = top + 4 + 16.0 * s;
    out << "<rect x=\"" << fmt(left + plot_w - 130) << "\" y=\"" << fmt(y)
        << "\" width=\"12\" height=\"12\" fill=\"" << kPalette[s % 6]
        << "\"/>\n";
    out << "<text x=\"" << fmt(left + plot_w - 112) << "\" y=\"" << fmt(y + 10)
        << "\" font-family=\"sans-serif\" font-size=\"11\">"
        << series[s].label << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void emit_histogram_svg(const std::vector<BarSeries> &series,
                        const std::filesystem::path &path,
                        const std::string &title) {
  const std::string svg = histogram_svg(series, title);
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << svg;
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace qwalknet
