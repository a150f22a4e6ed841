// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "qwalknet/walk_builder.hpp"

#include <cmath>
#include <numeric>

#include "qwalknet/errors.hpp"

namespace qwalknet {

namespace {

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

/// Controls matching the binary pattern of `value` over `qubits` (MSB on
/// qubits[0]).
std::vector<Control> pattern_controls(const std::vector<int> &qubits,
                                      std::size_t value) {
  const int m = static_cast<int>(qubits.size());
  std::vector<Control> controls(m);
  for (int u = 0; u < m; ++u) {
    const bool bit = (value >> (m - 1 - u)) & 1u;
    controls[u] = Control{qubits[u], bit};
  }
  return controls;
}

/// Multiplexed-RY binary tree loading sqrt(dist) onto `qubits`. Level `level`
/// rotates qubits[level] conditioned on the pattern of the earlier qubits;
/// zero-mass subtrees and exact zero angles are skipped. Gates are tagged
/// (block, layer_base + level) for the lowering stage.
void append_state_prep(std::vector<GateOp> &out, const std::vector<double> &dist,
                       const std::vector<int> &qubits,
                       const std::vector<Control> &extra_controls, int block,
                       int layer_base) {
  const int m = static_cast<int>(qubits.size());
  if (dist.size() != (std::size_t{1} << m)) {
    throw UsageError("distribution length must be 2^(qubit count)");
  }
  double total = 0.0;
  for (double p : dist) {
    if (p < 0.0) throw UsageError("distribution entries must be >= 0");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw UsageError("distribution must sum to 1 (got " +
                     std::to_string(total) + ")");
  }

  // masses[c] holds the subtree mass of prefix c at the current level.
  std::vector<double> masses(dist);
  std::vector<std::vector<double>> levels(m + 1);
  levels[m] = masses;
  for (int level = m - 1; level >= 0; --level) {
    std::vector<double> up(std::size_t{1} << level);
    for (std::size_t c = 0; c < up.size(); ++c) {
      up[c] = levels[level + 1][2 * c] + levels[level + 1][2 * c + 1];
    }
    levels[level] = std::move(up);
  }

  for (int level = 0; level < m; ++level) {
    for (std::size_t c = 0; c < (std::size_t{1} << level); ++c) {
      if (levels[level][c] == 0.0) continue;
      const double m0 = levels[level + 1][2 * c];
      const double m1 = levels[level + 1][2 * c + 1];
      const double theta = 2.0 * std::atan2(std::sqrt(m1), std::sqrt(m0));
      if (theta == 0.0) continue;
      GateOp gate;
      gate.kind = GateKind::Ry;
      gate.qubits = {qubits[level]};
      gate.params = {theta};
      gate.controls = extra_controls;
      if (level > 0) {
        auto prefix = pattern_controls(
            std::vector<int>(qubits.begin(), qubits.begin() + level), c);
        gate.controls.insert(gate.controls.end(), prefix.begin(), prefix.end());
      }
      gate.block = block;
      gate.layer = layer_base + level;
      out.push_back(std::move(gate));
    }
  }
}

std::vector<int> register_x(int n) {
  std::vector<int> q(n);
  std::iota(q.begin(), q.end(), 0);
  return q;
}

std::vector<int> register_y(int n) {
  std::vector<int> q(n);
  std::iota(q.begin(), q.end(), n);
  return q;
}

std::vector<double> neighbor_distribution(const Graph &g, int node, int n) {
  std::vector<double> dist(std::size_t{1} << n, 0.0);
  const double inv_k = 1.0 / g.degree(node);
  for (int j : g.adjacency[node]) dist[j] = inv_k;
  return dist;
}

/// Dagger of a gate run consisting solely of (multi-controlled) RY gates:
/// reversed order, negated angles. Layers are retagged so that the reversed
/// emission is ascending again.
std::vector<GateOp> dagger_ry_run(std::vector<GateOp> gates, int block,
                                  int layer_base, int layer_max) {
  std::reverse(gates.begin(), gates.end());
  for (auto &g : gates) {
    g.params[0] = -g.params[0];
    g.block = block;
    g.layer = layer_base + (layer_max - g.layer);
  }
  return gates;
}

}  // namespace

std::vector<GateOp> build_u1(int n_nodes) {
  const int n = qubits_per_register(n_nodes);
  std::vector<GateOp> gates;
  if (is_power_of_two(n_nodes)) {
    for (int q = 0; q < n; ++q) {
      gates.push_back(GateOp{GateKind::H, {q}, {}, {}});
    }
    return gates;
  }
  std::vector<double> uniform(std::size_t{1} << n, 0.0);
  for (int i = 0; i < n_nodes; ++i) uniform[i] = 1.0 / n_nodes;
  append_state_prep(gates, uniform, register_x(n), {}, /*block=*/0,
                    /*layer_base=*/0);
  return gates;
}

std::vector<GateOp> build_state_prep(const std::vector<double> &dist,
                                     const std::vector<int> &qubits) {
  std::vector<GateOp> gates;
  append_state_prep(gates, dist, qubits, {}, /*block=*/0, /*layer_base=*/0);
  return gates;
}

std::vector<GateOp> build_controlled_u2(const Graph &g) {
  const int n = qubits_per_register(g.n_nodes);
  const auto x = register_x(n);
  const auto y = register_y(n);
  std::vector<GateOp> gates;
  for (int i = 0; i < g.n_nodes; ++i) {
    append_state_prep(gates, neighbor_distribution(g, i, n), y,
                      pattern_controls(x, static_cast<std::size_t>(i)),
                      /*block=*/0, /*layer_base=*/0);
  }
  return gates;
}

std::vector<GateOp> build_coin_circuit(const Graph &g) {
  const int n = qubits_per_register(g.n_nodes);
  const auto x = register_x(n);
  const auto y = register_y(n);
  std::vector<GateOp> gates;
  for (int i = 0; i < g.n_nodes; ++i) {
    const auto x_controls = pattern_controls(x, static_cast<std::size_t>(i));

    // U2(i)^dagger: the state-prep run reversed with negated angles.
    std::vector<GateOp> prep;
    append_state_prep(prep, neighbor_distribution(g, i, n), y, x_controls,
                      /*block=*/0, /*layer_base=*/0);
    auto dag = dagger_ry_run(prep, /*block=*/0, /*layer_base=*/0,
                             /*layer_max=*/n - 1);
    gates.insert(gates.end(), dag.begin(), dag.end());

    // Reflection about |0...0> on register y within the x = i block:
    // a -1 phase on (x = i, y = 0) and a -1 phase on x = i combine to
    // 2|0><0| - I on the block, identity elsewhere.
    GateOp flip_zero;
    flip_zero.kind = GateKind::Phase;
    flip_zero.params = {M_PI};
    flip_zero.controls = x_controls;
    for (int q : y) flip_zero.controls.push_back(Control{q, false});
    flip_zero.layer = n;
    flip_zero.block = 0;
    gates.push_back(std::move(flip_zero));

    GateOp flip_block;
    flip_block.kind = GateKind::Phase;
    flip_block.params = {M_PI};
    flip_block.controls = x_controls;
    flip_block.layer = n + 1;
    flip_block.block = 0;
    gates.push_back(std::move(flip_block));

    // U2(i) again.
    for (auto &gate : prep) gate.layer += n + 2;
    gates.insert(gates.end(), prep.begin(), prep.end());
  }
  return gates;
}

std::vector<GateOp> build_shift_circuit(int qubits_per_reg) {
  if (qubits_per_reg < 1) throw UsageError("shift needs n >= 1");
  std::vector<GateOp> gates;
  for (int q = 0; q < qubits_per_reg; ++q) {
    gates.push_back(GateOp{GateKind::Swap, {q, q + qubits_per_reg}, {}, {}});
  }
  return gates;
}

Circuit build_walk_circuit(const Graph &g, int steps) {
  if (steps < 0) throw UsageError("step count must be >= 0");
  const int n = qubits_per_register(g.n_nodes);
  Circuit c;
  c.n_qubits = 2 * n;
  c.meta = CircuitMeta{g.hash(), g.n_nodes, steps};

  int block = 0;
  auto append_tagged = [&c, &block](std::vector<GateOp> gates) {
    for (auto &gate : gates) {
      if (gate.block >= 0) gate.block = block;
      c.gates.push_back(std::move(gate));
    }
    ++block;
  };

  append_tagged(build_u1(g.n_nodes));
  append_tagged(build_controlled_u2(g));
  for (int s = 0; s < steps; ++s) {
    append_tagged(build_coin_circuit(g));
    append_tagged(build_shift_circuit(n));
  }
  validate_circuit(c);
  return c;
}

}  // namespace qwalknet
