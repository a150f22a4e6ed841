// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>

#include "qwalknet/circuit.hpp"

namespace qwalknet {

/// JSON gate list: {"n_qubits": m, "gates": [{"kind": ..., "qubits": [...],
/// "params": [...], "controls": [[q, pol], ...]}]}.
std::string circuit_to_json_text(const Circuit &c);
Circuit circuit_from_json_text(const std::string &text);

void save_circuit_json(const Circuit &c, const std::filesystem::path &path);
Circuit load_circuit_json(const std::filesystem::path &path);

/// OpenQASM-3-compatible text for a basis-decomposed circuit (rx, ry, rz, h,
/// x, cx). Phase gates are emitted as rz plus an accumulated gphase so the
/// text stays exactly equivalent. Throws UsageError on non-basis gates.
std::string circuit_to_qasm3(const Circuit &c);

void save_circuit_qasm3(const Circuit &c, const std::filesystem::path &path);

}  // namespace qwalknet
