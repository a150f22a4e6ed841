// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace qwalknet {

/// One labeled probability series (a bar per category).
struct BarSeries {
  std::string label;
  std::vector<double> values;
};

/// Renders a grouped bar chart as a self-contained SVG string. All series
/// must be nonempty and of equal length. Deterministic for identical input.
std::string histogram_svg(const std::vector<BarSeries> &series,
                          const std::string &title = "");

void emit_histogram_svg(const std::vector<BarSeries> &series,
                        const std::filesystem::path &path,
                        const std::string &title = "");

}  // namespace qwalknet
