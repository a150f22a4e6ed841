// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qwalknet {

enum class GateKind { Rx, Ry, Rz, Phase, H, X, Cx, Swap };

std::string to_string(GateKind kind);
GateKind gate_kind_from_string(const std::string &name);

/// Control qubit with polarity: on_one=false fires on |0> (the half-filled
/// circle convention for mixed-polarity dispatch).
struct Control {
  int qubit = 0;
  bool on_one = true;
  bool operator==(const Control &) const = default;
};

/// One gate. `qubits` are the targets (2 for Cx/Swap, 1 for single-qubit
/// kinds). A non-empty `controls` list makes the gate multi-controlled.
///
/// Special form: kind == Phase with an empty target list is a controlled
/// global phase, multiplying matching basis states by exp(i*params[0]).
/// With no controls at all it is a plain global phase.
///
/// `block` and `layer` are lowering hints assigned by the walk builders and
/// are never serialized: gates sharing a block id form a region in which
/// gates with distinct control patterns commute (they act on orthogonal
/// control subspaces), and `layer` is the canonical sublayer used to regroup
/// the region before multiplexor fusion. Untagged gates (-1) are left alone.
struct GateOp {
  GateKind kind = GateKind::X;
  std::vector<int> qubits;
  std::vector<double> params;
  std::vector<Control> controls;
  int block = -1;
  int layer = -1;

  /// All qubits the gate touches (targets then controls).
  std::vector<int> support() const;
  bool is_basis() const;  // single-qubit rotation/H/X or bare CX

  bool operator==(const GateOp &other) const {
    return kind == other.kind && qubits == other.qubits &&
           params == other.params && controls == other.controls;
  }
};

struct CircuitMeta {
  std::uint64_t graph_hash = 0;
  int n_nodes = 0;
  int steps = 0;
  bool operator==(const CircuitMeta &) const = default;
};

/// Gate list over 2n qubits. Register x (walker position) is qubits [0, n),
/// register y (coin direction) is qubits [n, 2n). Qubit 0 holds the most
/// significant bit, so the simulator index of basis state |i>|j> is i*2^n+j.
struct Circuit {
  int n_qubits = 0;
  std::vector<GateOp> gates;
  CircuitMeta meta;

  bool operator==(const Circuit &other) const {
    return n_qubits == other.n_qubits && gates == other.gates &&
           meta == other.meta;
  }
};

/// Throws if any gate references qubits outside [0, n_qubits), repeats a
/// qubit within one gate, or carries a non-finite angle.
void validate_circuit(const Circuit &c);

/// Qubits per register: ceil(log2(n_nodes)).
int qubits_per_register(int n_nodes);

}  // namespace qwalknet
