// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "qwalknet/circuit.hpp"
#include "qwalknet/graph.hpp"

namespace qwalknet {

/// Uniform position loader on register x: n Hadamards when n_nodes is a
/// power of two, otherwise the amplitude-loading network for the uniform
/// n_nodes-point distribution padded with zeros.
std::vector<GateOp> build_u1(int n_nodes);

/// Amplitude loader: prepares sum_x sqrt(dist[x]) |x> on `qubits` (most
/// significant bit first) from |0...0>. One multiplexed-RY layer per qubit
/// level; rotations whose subtree mass is zero are omitted, as are exact
/// zero-angle rotations. All resulting amplitudes are real and nonnegative.
std::vector<GateOp> build_state_prep(const std::vector<double> &dist,
                                     const std::vector<int> &qubits);

/// Neighbor-superposition dispatch: for each node i, the state-prep network
/// for i's neighbor distribution on register y, with every gate additionally
/// controlled on register x matching the bits of i.
std::vector<GateOp> build_controlled_u2(const Graph &g);

/// Grover coin: for each node i, controlled on x = i, applies
/// U2(i) (2|0><0| - I) U2(i)^dagger on register y. Realized as
/// [U2 dagger gates; two controlled phase flips; U2 gates]; padded node
/// blocks (i >= n_nodes) are left as identity.
std::vector<GateOp> build_coin_circuit(const Graph &g);

/// Flip-flop shift: n SWAPs exchanging registers x and y qubit-wise.
std::vector<GateOp> build_shift_circuit(int qubits_per_reg);

/// Full walk: [U1 on x; controlled-U2; t x (coin; shift)].
/// Width is exactly 2*ceil(log2(n_nodes)).
Circuit build_walk_circuit(const Graph &g, int steps);

}  // namespace qwalknet
