// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

#include "qwalknet/circuit.hpp"
#include "qwalknet/rng.hpp"
#include "qwalknet/simulate.hpp"
#include "qwalknet/statevector.hpp"

namespace qwalknet::test {

using cd = std::complex<double>;

/// Dense unitary of a gate list, column by column through the simulator.
/// Test-side oracle, independent of the decomposition path it checks.
inline std::vector<std::vector<cd>> dense_unitary(
    const std::vector<GateOp> &gates, int n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<std::vector<cd>> u(dim, std::vector<cd>(dim, 0.0));
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector psi;
    psi.n_qubits = n_qubits;
    psi.amps.assign(dim, {0.0, 0.0});
    psi.amps[col] = {1.0, 0.0};
    for (const GateOp &g : gates) apply_gate(psi, g);
    for (std::size_t row = 0; row < dim; ++row) u[row][col] = psi.amps[row];
  }
  return u;
}

inline double max_entry_diff(const std::vector<std::vector<cd>> &a,
                             const std::vector<std::vector<cd>> &b) {
  double worst = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < a.size(); ++c) {
      worst = std::max(worst, std::abs(a[r][c] - b[r][c]));
    }
  }
  return worst;
}

/// Haar-ish random state (normalized complex Gaussian-free variant: uniform
/// amplitudes, good enough for equivalence checks).
inline StateVector random_state(int n_qubits, std::uint64_t seed) {
  Rng rng(seed);
  StateVector psi;
  psi.n_qubits = n_qubits;
  psi.amps.resize(std::size_t{1} << n_qubits);
  double norm2 = 0.0;
  for (auto &a : psi.amps) {
    a = {rng.uniform() - 0.5, rng.uniform() - 0.5};
    norm2 += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto &a : psi.amps) a *= scale;
  return psi;
}

inline StateVector apply_all(const std::vector<GateOp> &gates, StateVector psi) {
  for (const GateOp &g : gates) apply_gate(psi, g);
  return psi;
}

inline double max_amp_diff(const StateVector &a, const StateVector &b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.amps.size(); ++i) {
    worst = std::max(worst, std::abs(a.amps[i] - b.amps[i]));
  }
  return worst;
}

}  // namespace qwalknet::test
