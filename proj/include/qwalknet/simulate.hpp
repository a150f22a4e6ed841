// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <vector>

#include "qwalknet/circuit.hpp"
#include "qwalknet/statevector.hpp"

namespace qwalknet {

/// Per-gate depolarizing strength for trajectory noise.
struct NoiseModel {
  double epsilon = 0.0;
};

/// Sampled counts keyed by node index; kInvalidNode collects measurement
/// outcomes whose position register decoded to a padded index >= n_nodes.
inline constexpr int kInvalidNode = -1;
using Counts = std::map<int, std::int64_t>;

struct SimResult {
  StateVector final_state;
  std::vector<double> node_probs;  // length n_nodes
  double invalid_prob = 0.0;       // mass on padded node indices
  Counts samples;                  // empty unless sampled
  std::int64_t shots = 0;
  std::optional<NoiseModel> noise;
};

/// Default simulator width cap; override with the QWALKNET_QUBIT_CAP
/// environment variable or the explicit argument.
int simulator_qubit_cap();

/// Applies one gate in place (any IR gate, controls included).
void apply_gate(StateVector &psi, const GateOp &gate);

/// Exact state-vector simulation from |0...0>.
SimResult simulate(const Circuit &c, int n_nodes);
SimResult simulate(const Circuit &c, int n_nodes, int qubit_cap);

/// Multinomial draw from result.node_probs (plus the invalid bucket),
/// deterministic under seed.
Counts sample(const SimResult &result, std::int64_t shots, std::uint64_t seed);

/// Stochastic trajectory noise: after each gate, with probability epsilon a
/// uniformly random Pauli hits one of the gate's qubits; register x is
/// measured at the end of each trajectory. epsilon = 0 reproduces
/// sample(simulate(c), shots, seed) exactly, same seed giving same counts.
Counts simulate_noisy(const Circuit &c, int n_nodes, const NoiseModel &noise,
                      std::int64_t shots, std::uint64_t seed);

std::string counts_to_csv(const Counts &counts);
std::string counts_to_json_text(const Counts &counts);
void write_counts_csv(const Counts &counts, const std::filesystem::path &path);

}  // namespace qwalknet
