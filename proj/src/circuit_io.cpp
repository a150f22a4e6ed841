// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "qwalknet/circuit_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qwalknet/errors.hpp"

namespace qwalknet {

std::string circuit_to_json_text(const Circuit &c) {
  nlohmann::json j;
  j["n_qubits"] = c.n_qubits;
  auto gates = nlohmann::json::array();
  for (const GateOp &g : c.gates) {
    nlohmann::json jg;
    jg["kind"] = to_string(g.kind);
    jg["qubits"] = g.qubits;
    jg["params"] = g.params;
    auto controls = nlohmann::json::array();
    for (const Control &ctl : g.controls) {
      controls.push_back({ctl.qubit, ctl.on_one ? 1 : 0});
    }
    jg["controls"] = controls;
    gates.push_back(std::move(jg));
  }
  j["gates"] = std::move(gates);
  if (c.meta.n_nodes > 0) {
    j["meta"] = {{"graph_hash", c.meta.graph_hash},
                 {"n_nodes", c.meta.n_nodes},
                 {"steps", c.meta.steps}};
  }
  return j.dump() + "\n";
}

Circuit circuit_from_json_text(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw IoError(std::string("circuit JSON parse error: ") + e.what());
  }
  Circuit c;
  try {
    c.n_qubits = j.at("n_qubits").get<int>();
    for (const auto &jg : j.at("gates")) {
      GateOp g;
      g.kind = gate_kind_from_string(jg.at("kind").get<std::string>());
      g.qubits = jg.at("qubits").get<std::vector<int>>();
      g.params = jg.at("params").get<std::vector<double>>();
      for (const auto &ctl : jg.at("controls")) {
        g.controls.push_back(
            Control{ctl.at(0).get<int>(), ctl.at(1).get<int>() != 0});
      }
      c.gates.push_back(std::move(g));
    }
    if (j.contains("meta")) {
      c.meta.graph_hash = j["meta"].value("graph_hash", std::uint64_t{0});
      c.meta.n_nodes = j["meta"].value("n_nodes", 0);
      c.meta.steps = j["meta"].value("steps", 0);
    }
  } catch (const nlohmann::json::exception &e) {
    throw IoError(std::string("circuit JSON structure error: ") + e.what());
  }
  validate_circuit(c);
  return c;
}

void save_circuit_json(const Circuit &c, const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << circuit_to_json_text(c);
  if (!out) throw IoError("write failed for " + path.string());
}

Circuit load_circuit_json(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return circuit_from_json_text(buf.str());
}

namespace {

std::string fmt_angle(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

}  // namespace

std::string circuit_to_qasm3(const Circuit &c) {
  std::ostringstream out;
  out << "OPENQASM 3.0;\n";
  out << "include \"stdgates.inc\";\n";
  out << "qubit[" << c.n_qubits << "] q;\n";
  double global_phase = 0.0;
  std::ostringstream body;
  for (const GateOp &g : c.gates) {
    if (!g.is_basis()) {
      throw UsageError("QASM export expects a basis-decomposed circuit; found " +
                       to_string(g.kind) + " with " +
                       std::to_string(g.controls.size()) + " controls");
    }
    switch (g.kind) {
      case GateKind::Rx:
        body << "rx(" << fmt_angle(g.params[0]) << ") q[" << g.qubits[0] << "];\n";
        break;
      case GateKind::Ry:
        body << "ry(" << fmt_angle(g.params[0]) << ") q[" << g.qubits[0] << "];\n";
        break;
      case GateKind::Rz:
        body << "rz(" << fmt_angle(g.params[0]) << ") q[" << g.qubits[0] << "];\n";
        break;
      case GateKind::Phase:
        // p(l) = rz(l) up to a global phase of l/2; fold the residue into
        // one trailing gphase so the text is exactly equivalent.
        if (g.qubits.empty()) {
          global_phase += g.params[0];
        } else {
          body << "rz(" << fmt_angle(g.params[0]) << ") q[" << g.qubits[0]
               << "];\n";
          global_phase += g.params[0] / 2.0;
        }
        break;
      case GateKind::H:
        body << "h q[" << g.qubits[0] << "];\n";
        break;
      case GateKind::X:
        body << "x q[" << g.qubits[0] << "];\n";
        break;
      case GateKind::Cx:
        body << "cx q[" << g.qubits[0] << "], q[" << g.qubits[1] << "];\n";
        break;
      case GateKind::Swap:
        throw UsageError("QASM export expects SWAP to be decomposed");
    }
  }
  const double tau = 2.0 * M_PI;
  global_phase = std::fmod(global_phase, tau);
  if (global_phase != 0.0) {
    out << "gphase(" << fmt_angle(global_phase) << ");\n";
  }
  out << body.str();
  return out.str();
}

void save_circuit_qasm3(const Circuit &c, const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << circuit_to_qasm3(c);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace qwalknet
