// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "qwalknet/statevector.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qwalknet/errors.hpp"

namespace qwalknet {

StateVector StateVector::zero_state(int n_qubits) {
  StateVector psi;
  psi.n_qubits = n_qubits;
  psi.amps.assign(std::size_t{1} << n_qubits, {0.0, 0.0});
  psi.amps[0] = {1.0, 0.0};
  return psi;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto &a : amps) s += std::norm(a);
  return std::sqrt(s);
}

std::vector<double> node_probabilities(const StateVector &psi, int n_nodes) {
  if (psi.n_qubits % 2 != 0) {
    throw NumericError("node_probabilities expects a dual-register state");
  }
  const double nrm = psi.norm();
  if (std::abs(nrm - 1.0) > 1e-10) {
    throw NumericError("state not normalized: |norm - 1| = " +
                       std::to_string(std::abs(nrm - 1.0)));
  }
  const int n = psi.n_qubits / 2;
  const std::size_t block = std::size_t{1} << n;
  std::vector<double> probs(n_nodes, 0.0);
  double padded = 0.0;
  for (std::size_t i = 0; i < block; ++i) {
    double p = 0.0;
    for (std::size_t j = 0; j < block; ++j) {
      p += std::norm(psi.amps[i * block + j]);
    }
    if (i < static_cast<std::size_t>(n_nodes)) {
      probs[i] = p;
    } else {
      padded += p;
    }
  }
  if (padded > 1e-10) {
    throw NumericError("padded node indices carry probability " +
                       std::to_string(padded));
  }
  return probs;
}

double padded_probability(const StateVector &psi, int n_nodes) {
  const int n = psi.n_qubits / 2;
  const std::size_t block = std::size_t{1} << n;
  double padded = 0.0;
  for (std::size_t i = n_nodes; i < block; ++i) {
    for (std::size_t j = 0; j < block; ++j) {
      padded += std::norm(psi.amps[i * block + j]);
    }
  }
  return padded;
}

void write_state_csv(const StateVector &psi, const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << "index,re,im\n";
  out.precision(17);
  for (std::size_t idx = 0; idx < psi.amps.size(); ++idx) {
    out << idx << "," << psi.amps[idx].real() << "," << psi.amps[idx].imag()
        << "\n";
  }
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace qwalknet
