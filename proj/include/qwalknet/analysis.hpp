// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qwalknet/graph.hpp"

namespace qwalknet {

/// Power-law fit y = a * x^b from least squares on (ln x, ln y).
struct FitResult {
  double a = 0.0;
  double b = 0.0;
  double stderr_a = 0.0;
  double stderr_b = 0.0;
  double r_squared = 0.0;
  int n_points = 0;
};

/// One (graph instance, step count) depth measurement.
struct ScalingRecord {
  GraphModel model = GraphModel::ER;
  int n_nodes = 0;
  int steps = 0;
  std::uint64_t seed = 0;
  int width = 0;
  int depth_basis = 0;
  long cx_count = 0;
};

/// Total variation distance (1/2) sum |p - q|. Both vectors must have equal
/// length and sum to 1 within 1e-6 (renormalize empirical counts first).
double l1_distance(const std::vector<double> &p, const std::vector<double> &q);

/// Counts (by index 0..n-1) to a normalized probability vector.
std::vector<double> counts_to_probs(const std::vector<std::int64_t> &counts);

FitResult fit_power_law(const std::vector<double> &xs,
                        const std::vector<double> &ys);

struct ScalingResult {
  std::vector<ScalingRecord> records;
  FitResult fit;              // mean basis depth vs N (raw)
  std::vector<std::string> warnings;
};

struct TScalingResult {
  std::vector<ScalingRecord> records;
  FitResult fit_raw;          // depth(t) as measured
  FitResult fit_step;         // depth(t) - depth(0): per-step contribution
  int depth_t0 = 0;           // preparation-only depth
  std::vector<std::string> warnings;
};

/// Depth-vs-N experiment: for each (N, seed) generate a graph from the
/// params template, build the walk at fixed t, decompose and record the
/// basis depth; fits mean depth against N. Generation failures are recorded
/// as warnings and excluded from the fit. `jobs` > 1 fans the independent
/// (N, seed) runs over threads.
ScalingResult run_n_scaling(const GraphParams &params_template,
                            const std::vector<int> &n_values, int steps,
                            int seeds_per_point, int jobs = 1);

/// Depth-vs-t experiment at fixed N. The power law is fitted both on the raw
/// depths and on the per-step contribution depth(t) - depth(0); the latter
/// isolates the walk-step scaling from the constant preparation prefix.
TScalingResult run_t_scaling(const GraphParams &params_template, int n_nodes,
                             const std::vector<int> &t_values,
                             int seeds_per_point, int jobs = 1);

struct CompareRow {
  int t = 0;
  int node = 0;
  double p_exact = 0.0;
  double p_circuit = 0.0;
  double p_sampled = 0.0;
};

struct CompareResult {
  std::vector<double> l1_per_t;          // index t-1
  std::vector<double> l1_sampled_per_t;  // empirical vs exact
  std::vector<CompareRow> rows;
};

/// Runs the circuit pipeline against the dense oracle for t = 1..t_max,
/// recording per-node probabilities and L1 distances. When shots > 0 the
/// circuit distribution is additionally sampled. Requires N <= 16 and
/// t_max <= 8 (oracle comparison scale).
CompareResult compare_circuit_vs_oracle(const Graph &g, int t_max,
                                        std::int64_t shots = 0,
                                        std::uint64_t seed = 0);

// CSV emitters (schemas pinned; no header comments here, callers prepend
// provenance lines).
std::string scaling_records_to_csv(const std::vector<ScalingRecord> &records);
std::string fit_summary_to_csv(const std::vector<std::pair<std::string, FitResult>> &fits);
std::string compare_rows_to_csv(const std::vector<CompareRow> &rows);

}  // namespace qwalknet
