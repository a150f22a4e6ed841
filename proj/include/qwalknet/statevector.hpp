// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <vector>

namespace qwalknet {

/// Dense amplitude vector over n_qubits qubits. Qubit 0 is the most
/// significant bit of the basis index, so for a dual-register circuit the
/// amplitude of |i>|j> sits at index i*2^n + j.
struct StateVector {
  int n_qubits = 0;
  std::vector<std::complex<double>> amps;

  static StateVector zero_state(int n_qubits);

  std::size_t dim() const { return amps.size(); }
  double norm() const;  // 2-norm
};

/// Marginal node distribution P_i = sum_j |psi_{ij}|^2 over the full second
/// register. Requires a normalized state (1e-10) and near-zero probability
/// (< 1e-10) on padded node indices i >= n_nodes; throws NumericError
/// otherwise. Returns a length-n_nodes vector.
std::vector<double> node_probabilities(const StateVector &psi, int n_nodes);

/// Total probability on padded node indices i >= n_nodes.
double padded_probability(const StateVector &psi, int n_nodes);

/// CSV dump: one "index,re,im" row per amplitude.
void write_state_csv(const StateVector &psi, const std::filesystem::path &path);

}  // namespace qwalknet
