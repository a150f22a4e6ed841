// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "qwalknet/graph.hpp"
#include "qwalknet/statevector.hpp"

namespace qwalknet::oracle {

/// Dense exact walk operators over the padded space of dimension 2^(2n),
/// n = ceil(log2 N). Ground truth for the circuit pipeline.
struct WalkOperators {
  int qubits_per_register = 0;
  Eigen::Index dim = 0;
  Eigen::MatrixXcd coin;   // block-diagonal Grover reflections
  Eigen::MatrixXcd shift;  // permutation |i>|j> -> |j>|i>
  Eigen::MatrixXcd step;   // shift * coin
};

/// Refuses graphs with more than kMaxNodes nodes; the dense representation
/// exists for validation, not scale.
inline constexpr int kMaxNodes = 64;

/// Uniform superposition over all directed edges: amplitude at (i, j) is
/// 1/(sqrt(N) sqrt(k_i)) when j is a neighbor of i, zero otherwise.
StateVector initial_state(const Graph &g);

/// Coin: per valid node i the reflection 2|s_i><s_i| - I embedded in the
/// full 2^n coin space (entries 2/k_i - delta on neighbor pairs, -delta
/// elsewhere on the diagonal); padded node blocks are identity.
Eigen::MatrixXcd build_coin(const Graph &g);

/// Flip-flop shift: permutation matrix mapping basis (i, j) to (j, i).
Eigen::MatrixXcd build_shift(int qubits_per_reg);

WalkOperators build_walk_operators(const Graph &g);

/// (shift * coin)^t applied to the initial state; t = 0 returns the initial
/// state itself.
StateVector evolve(const Graph &g, int steps);

StateVector apply_steps(const WalkOperators &ops, const StateVector &psi,
                        int steps);

}  // namespace qwalknet::oracle
