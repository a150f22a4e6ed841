// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>

#include "qwalknet/circuit.hpp"

namespace qwalknet {

/// Width, gate counts and dependency-DAG depths of a circuit. Two gates
/// conflict iff they share a qubit (controls included). `counts` and
/// `cx_count` refer to the basis-decomposed form; `depth_logical` is the
/// depth of the circuit as built.
struct ResourceReport {
  int width = 0;
  int depth_logical = 0;
  int depth_basis = 0;
  std::map<std::string, long> counts;
  long cx_count = 0;
};

/// Longest dependency chain over the gate list.
int circuit_depth(const std::vector<GateOp> &gates, int n_qubits);

ResourceReport resource_report(const Circuit &c);

std::string report_to_json_text(const ResourceReport &r);

}  // namespace qwalknet
