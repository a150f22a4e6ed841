// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "qwalknet/oracle.hpp"

#include <cmath>

#include "qwalknet/circuit.hpp"
#include "qwalknet/errors.hpp"

namespace qwalknet::oracle {

namespace {

void check_size(const Graph &g) {
  if (g.n_nodes > kMaxNodes) {
    throw ResourceError("dense oracle refuses N = " +
                        std::to_string(g.n_nodes) + " (> " +
                        std::to_string(kMaxNodes) + ")");
  }
}

}  // namespace

StateVector initial_state(const Graph &g) {
  check_size(g);
  const int n = qubits_per_register(g.n_nodes);
  const std::size_t block = std::size_t{1} << n;
  StateVector psi;
  psi.n_qubits = 2 * n;
  psi.amps.assign(block * block, {0.0, 0.0});
  const double root_n = std::sqrt(static_cast<double>(g.n_nodes));
  for (int i = 0; i < g.n_nodes; ++i) {
    const double amp = 1.0 / (root_n * std::sqrt(static_cast<double>(g.degree(i))));
    for (int j : g.adjacency[i]) {
      psi.amps[static_cast<std::size_t>(i) * block + j] = {amp, 0.0};
    }
  }
  return psi;
}

Eigen::MatrixXcd build_coin(const Graph &g) {
  check_size(g);
  const int n = qubits_per_register(g.n_nodes);
  const Eigen::Index block = Eigen::Index{1} << n;
  const Eigen::Index dim = block * block;
  Eigen::MatrixXcd coin = Eigen::MatrixXcd::Identity(dim, dim);
  for (int i = 0; i < g.n_nodes; ++i) {
    // 2|s_i><s_i| - I on the full coin space of node i.
    const double two_over_k = 2.0 / g.degree(i);
    const Eigen::Index base = static_cast<Eigen::Index>(i) * block;
    for (Eigen::Index j = 0; j < block; ++j) {
      coin(base + j, base + j) = -1.0;
    }
    for (int j : g.adjacency[i]) {
      for (int jp : g.adjacency[i]) {
        coin(base + j, base + jp) += two_over_k;
      }
    }
  }
  return coin;
}

Eigen::MatrixXcd build_shift(int qubits_per_reg) {
  if (qubits_per_reg < 1) throw UsageError("shift needs n >= 1");
  const Eigen::Index block = Eigen::Index{1} << qubits_per_reg;
  const Eigen::Index dim = block * block;
  Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < block; ++i) {
    for (Eigen::Index j = 0; j < block; ++j) {
      shift(j * block + i, i * block + j) = 1.0;
    }
  }
  return shift;
}

WalkOperators build_walk_operators(const Graph &g) {
  check_size(g);
  WalkOperators ops;
  ops.qubits_per_register = qubits_per_register(g.n_nodes);
  const Eigen::Index block = Eigen::Index{1} << ops.qubits_per_register;
  ops.dim = block * block;
  ops.coin = build_coin(g);
  ops.shift = build_shift(ops.qubits_per_register);
  // shift is the permutation (i,j) -> (j,i), so shift*coin is a row
  // permutation of coin; no dense product needed.
  ops.step = Eigen::MatrixXcd(ops.dim, ops.dim);
  for (Eigen::Index i = 0; i < block; ++i) {
    for (Eigen::Index j = 0; j < block; ++j) {
      ops.step.row(j * block + i) = ops.coin.row(i * block + j);
    }
  }
  return ops;
}

StateVector apply_steps(const WalkOperators &ops, const StateVector &psi,
                        int steps) {
  if (steps < 0) throw UsageError("step count must be >= 0");
  StateVector out = psi;
  Eigen::Map<Eigen::VectorXcd> v(out.amps.data(),
                                 static_cast<Eigen::Index>(out.amps.size()));
  for (int t = 0; t < steps; ++t) {
    v = ops.step * v;
  }
  return out;
}

StateVector evolve(const Graph &g, int steps) {
  const WalkOperators ops = build_walk_operators(g);
  return apply_steps(ops, initial_state(g), steps);
}

}  // namespace qwalknet::oracle
