// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qwalknet/circuit.hpp"

namespace qwalknet {

/// Lowers a circuit to the {1-qubit rotations (Rx/Ry/Rz/Phase), H, X, Cx}
/// basis without ancilla qubits. The action on the state is preserved
/// exactly (up to double rounding); multi-controlled gates are expanded by
/// the recursive scheme described in decompose.cpp, and runs of tagged
/// multi-controlled RY gates are fused into Gray-code rotation multiplexors
/// when that is cheaper. Deterministic: identical input gives an identical
/// gate list.
Circuit decompose_to_basis(const Circuit &c);

/// CX-count estimate of lowering one multi-controlled X with `n_controls`
/// controls when `n_free` other qubits are available as (dirty) workspace.
/// Mirrors the recursion actually used by decompose_to_basis.
long estimate_mcx_cx_cost(int n_controls, int n_free);

}  // namespace qwalknet
