// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "qwalknet/circuit.hpp"

#include <cmath>
#include <set>

#include "qwalknet/errors.hpp"

namespace qwalknet {

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::Rx: return "RX";
    case GateKind::Ry: return "RY";
    case GateKind::Rz: return "RZ";
    case GateKind::Phase: return "PHASE";
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Cx: return "CX";
    case GateKind::Swap: return "SWAP";
  }
  return "?";
}

GateKind gate_kind_from_string(const std::string &name) {
  if (name == "RX") return GateKind::Rx;
  if (name == "RY") return GateKind::Ry;
  if (name == "RZ") return GateKind::Rz;
  if (name == "PHASE") return GateKind::Phase;
  if (name == "H") return GateKind::H;
  if (name == "X") return GateKind::X;
  if (name == "CX") return GateKind::Cx;
  if (name == "SWAP") return GateKind::Swap;
  throw UsageError("unknown gate kind '" + name + "'");
}

std::vector<int> GateOp::support() const {
  std::vector<int> s = qubits;
  for (const auto &c : controls) s.push_back(c.qubit);
  return s;
}

bool GateOp::is_basis() const {
  if (!controls.empty()) return false;
  switch (kind) {
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::H:
    case GateKind::X:
      return qubits.size() == 1;
    case GateKind::Phase:
      return qubits.size() <= 1;  // empty targets = global phase
    case GateKind::Cx:
      return qubits.size() == 2;
    case GateKind::Swap:
      return false;
  }
  return false;
}

namespace {

int expected_targets(GateKind kind) {
  switch (kind) {
    case GateKind::Cx:
    case GateKind::Swap:
      return 2;
    case GateKind::Phase:
      return -1;  // 0 or 1
    default:
      return 1;
  }
}

}  // namespace

void validate_circuit(const Circuit &c) {
  for (std::size_t idx = 0; idx < c.gates.size(); ++idx) {
    const GateOp &g = c.gates[idx];
    const std::string where = "gate " + std::to_string(idx) + " (" +
                              to_string(g.kind) + ")";
    const int want = expected_targets(g.kind);
    if (want >= 0 && static_cast<int>(g.qubits.size()) != want) {
      throw UsageError(where + ": expected " + std::to_string(want) +
                       " target qubits");
    }
    if (g.kind == GateKind::Phase && g.qubits.size() > 1) {
      throw UsageError(where + ": phase takes at most one target");
    }
    std::set<int> seen;
    for (int q : g.support()) {
      if (q < 0 || q >= c.n_qubits) {
        throw UsageError(where + ": qubit " + std::to_string(q) +
                         " outside [0, " + std::to_string(c.n_qubits) + ")");
      }
      if (!seen.insert(q).second) {
        throw UsageError(where + ": qubit " + std::to_string(q) + " repeated");
      }
    }
    for (double p : g.params) {
      if (!std::isfinite(p)) throw UsageError(where + ": non-finite angle");
    }
    const bool needs_param = g.kind == GateKind::Rx || g.kind == GateKind::Ry ||
                             g.kind == GateKind::Rz ||
                             g.kind == GateKind::Phase;
    if (needs_param && g.params.size() != 1) {
      throw UsageError(where + ": expected exactly one angle");
    }
    if (!needs_param && !g.params.empty()) {
      throw UsageError(where + ": unexpected parameters");
    }
  }
}

int qubits_per_register(int n_nodes) {
  if (n_nodes < 2) throw UsageError("need at least two nodes");
  int n = 0;
  while ((1 << n) < n_nodes) ++n;
  return n;
}

}  // namespace qwalknet
