// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "qwalknet/resources.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "qwalknet/decompose.hpp"

namespace qwalknet {

int circuit_depth(const std::vector<GateOp> &gates, int n_qubits) {
  std::vector<int> frontier(n_qubits, 0);
  int depth = 0;
  for (const GateOp &g : gates) {
    int start = 0;
    const auto support = g.support();
    for (int q : support) start = std::max(start, frontier[q]);
    for (int q : support) frontier[q] = start + 1;
    depth = std::max(depth, start + 1);
  }
  return depth;
}

ResourceReport resource_report(const Circuit &c) {
  ResourceReport r;
  r.width = c.n_qubits;
  r.depth_logical = circuit_depth(c.gates, c.n_qubits);
  const Circuit basis = decompose_to_basis(c);
  r.depth_basis = circuit_depth(basis.gates, basis.n_qubits);
  for (const GateOp &g : basis.gates) ++r.counts[to_string(g.kind)];
  const auto it = r.counts.find("CX");
  r.cx_count = it == r.counts.end() ? 0 : it->second;
  return r;
}

std::string report_to_json_text(const ResourceReport &r) {
  nlohmann::json j;
  j["width"] = r.width;
  j["depth_logical"] = r.depth_logical;
  j["depth_basis"] = r.depth_basis;
  j["counts"] = r.counts;
  j["cx_count"] = r.cx_count;
  return j.dump(2) + "\n";
}

}  // namespace qwalknet
