// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "qwalknet/simulate.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qwalknet/errors.hpp"
#include "qwalknet/rng.hpp"

namespace qwalknet {

namespace {

using cd = std::complex<double>;
using Mat2 = std::array<std::array<cd, 2>, 2>;

constexpr cd kI{0.0, 1.0};

std::size_t qubit_mask(int qubit, int n_qubits) {
  return std::size_t{1} << (n_qubits - 1 - qubit);
}

Mat2 gate_matrix(const GateOp &g) {
  switch (g.kind) {
    case GateKind::Rx: {
      const double h = g.params[0] / 2;
      return {{{std::cos(h), -kI * std::sin(h)},
               {-kI * std::sin(h), std::cos(h)}}};
    }
    case GateKind::Ry: {
      const double h = g.params[0] / 2;
      return {{{std::cos(h), -std::sin(h)}, {std::sin(h), std::cos(h)}}};
    }
    case GateKind::Rz: {
      const double h = g.params[0] / 2;
      return {{{std::exp(-kI * h), 0.0}, {0.0, std::exp(kI * h)}}};
    }
    case GateKind::Phase:
      return {{{1.0, 0.0}, {0.0, std::exp(kI * g.params[0])}}};
    case GateKind::H: {
      const double s = 1.0 / std::sqrt(2.0);
      return {{{s, s}, {s, -s}}};
    }
    case GateKind::X:
      return {{{0.0, 1.0}, {1.0, 0.0}}};
    default:
      throw UsageError("no 1-qubit matrix for " + to_string(g.kind));
  }
}

struct ControlCondition {
  std::size_t mask = 0;
  std::size_t pattern = 0;
  bool matches(std::size_t idx) const { return (idx & mask) == pattern; }
};

ControlCondition control_condition(const GateOp &g, int n_qubits) {
  ControlCondition cond;
  for (const Control &c : g.controls) {
    const std::size_t m = qubit_mask(c.qubit, n_qubits);
    cond.mask |= m;
    if (c.on_one) cond.pattern |= m;
  }
  return cond;
}

void apply_1q(StateVector &psi, const Mat2 &u, int target,
              const ControlCondition &cond) {
  const std::size_t tm = qubit_mask(target, psi.n_qubits);
  const std::size_t dim = psi.dim();
  for (std::size_t idx = 0; idx < dim; ++idx) {
    if ((idx & tm) != 0 || !cond.matches(idx)) continue;
    const cd a0 = psi.amps[idx];
    const cd a1 = psi.amps[idx | tm];
    psi.amps[idx] = u[0][0] * a0 + u[0][1] * a1;
    psi.amps[idx | tm] = u[1][0] * a0 + u[1][1] * a1;
  }
}

}  // namespace

void apply_gate(StateVector &psi, const GateOp &gate) {
  const int Q = psi.n_qubits;
  const ControlCondition cond = control_condition(gate, Q);
  switch (gate.kind) {
    case GateKind::Cx: {
      const std::size_t cm = qubit_mask(gate.qubits[0], Q);
      const std::size_t tm = qubit_mask(gate.qubits[1], Q);
      for (std::size_t idx = 0; idx < psi.dim(); ++idx) {
        if ((idx & cm) == 0 || (idx & tm) != 0 || !cond.matches(idx)) continue;
        std::swap(psi.amps[idx], psi.amps[idx | tm]);
      }
      return;
    }
    case GateKind::Swap: {
      const std::size_t am = qubit_mask(gate.qubits[0], Q);
      const std::size_t bm = qubit_mask(gate.qubits[1], Q);
      for (std::size_t idx = 0; idx < psi.dim(); ++idx) {
        if ((idx & am) == 0 || (idx & bm) != 0 || !cond.matches(idx)) continue;
        std::swap(psi.amps[idx], psi.amps[idx ^ am ^ bm]);
      }
      return;
    }
    case GateKind::Phase:
      if (gate.qubits.empty()) {
        const cd phase = std::exp(kI * gate.params[0]);
        for (std::size_t idx = 0; idx < psi.dim(); ++idx) {
          if (cond.matches(idx)) psi.amps[idx] *= phase;
        }
        return;
      }
      [[fallthrough]];
    default:
      apply_1q(psi, gate_matrix(gate), gate.qubits[0], cond);
  }
}

int simulator_qubit_cap() {
  if (const char *env = std::getenv("QWALKNET_QUBIT_CAP")) {
    const int cap = std::atoi(env);
    if (cap > 0) return cap;
  }
  return 24;
}

SimResult simulate(const Circuit &c, int n_nodes) {
  return simulate(c, n_nodes, simulator_qubit_cap());
}

SimResult simulate(const Circuit &c, int n_nodes, int qubit_cap) {
  validate_circuit(c);
  if (c.n_qubits > qubit_cap) {
    throw ResourceError("circuit width " + std::to_string(c.n_qubits) +
                        " exceeds qubit cap " + std::to_string(qubit_cap));
  }
  SimResult result;
  result.final_state = StateVector::zero_state(c.n_qubits);
  for (const GateOp &g : c.gates) apply_gate(result.final_state, g);

  const double nrm = result.final_state.norm();
  if (!std::isfinite(nrm)) throw NumericError("non-finite amplitudes");
  if (std::abs(nrm - 1.0) > 1e-10) {
    throw NumericError("final norm deviates from 1 by " +
                       std::to_string(std::abs(nrm - 1.0)));
  }
  result.invalid_prob = padded_probability(result.final_state, n_nodes);
  result.node_probs = node_probabilities(result.final_state, n_nodes);
  return result;
}

namespace {

/// Inverse-CDF multinomial draws; category -1 is the invalid bucket.
Counts draw_counts(const std::vector<double> &probs, double invalid_mass,
                   std::int64_t shots, Rng &rng) {
  const bool with_invalid = invalid_mass > 0.0;
  std::vector<double> cumulative;
  cumulative.reserve(probs.size() + 1);
  double acc = 0.0;
  for (double p : probs) {
    acc += p;
    cumulative.push_back(acc);
  }
  if (with_invalid) {
    acc += invalid_mass;
    cumulative.push_back(acc);
  }

  Counts counts;
  for (std::int64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    std::size_t cat = static_cast<std::size_t>(it - cumulative.begin());
    if (cat >= cumulative.size()) cat = cumulative.size() - 1;
    if (with_invalid && cat == probs.size()) {
      ++counts[kInvalidNode];
    } else {
      ++counts[static_cast<int>(std::min(cat, probs.size() - 1))];
    }
  }
  return counts;
}

}  // namespace

Counts sample(const SimResult &result, std::int64_t shots, std::uint64_t seed) {
  if (shots < 1) throw UsageError("shots must be >= 1");
  Rng rng(seed);
  return draw_counts(result.node_probs, result.invalid_prob, shots, rng);
}

Counts simulate_noisy(const Circuit &c, int n_nodes, const NoiseModel &noise,
                      std::int64_t shots, std::uint64_t seed) {
  if (shots < 1) throw UsageError("shots must be >= 1");
  if (noise.epsilon < 0.0 || noise.epsilon > 1.0) {
    throw UsageError("epsilon must be in [0, 1]");
  }
  for (const GateOp &g : c.gates) {
    if (!g.is_basis()) {
      throw UsageError("noisy simulation expects a basis-decomposed circuit");
    }
  }
  if (noise.epsilon == 0.0) {
    // Exact no-noise limit: defer to the noiseless sampler so the counts
    // are bit-identical under the same seed.
    return sample(simulate(c, n_nodes), shots, seed);
  }

  const int Q = c.n_qubits;
  const int n = Q / 2;
  if (Q > simulator_qubit_cap()) {
    throw ResourceError("circuit width exceeds qubit cap");
  }

  const Mat2 pauli_x{{{0.0, 1.0}, {1.0, 0.0}}};
  const Mat2 pauli_y{{{0.0, -kI}, {kI, 0.0}}};
  const Mat2 pauli_z{{{1.0, 0.0}, {0.0, -1.0}}};
  const std::array<Mat2, 3> paulis{pauli_x, pauli_y, pauli_z};

  Rng rng(seed);
  Counts counts;
  const ControlCondition all{};
  for (std::int64_t shot = 0; shot < shots; ++shot) {
    StateVector psi = StateVector::zero_state(Q);
    for (const GateOp &g : c.gates) {
      apply_gate(psi, g);
      if (!rng.bernoulli(noise.epsilon)) continue;
      const auto support = g.support();
      if (support.empty()) continue;
      const int hit = support[rng.below(support.size())];
      const Mat2 &pauli = paulis[rng.below(3)];
      apply_1q(psi, pauli, hit, all);
    }
    // Measure register x: sample a full basis index, keep the top n bits.
    double u = rng.uniform();
    std::size_t drawn = psi.dim() - 1;
    double acc = 0.0;
    for (std::size_t idx = 0; idx < psi.dim(); ++idx) {
      acc += std::norm(psi.amps[idx]);
      if (u < acc) {
        drawn = idx;
        break;
      }
    }
    const int node = static_cast<int>(drawn >> n);
    ++counts[node < n_nodes ? node : kInvalidNode];
  }
  return counts;
}

std::string counts_to_csv(const Counts &counts) {
  std::ostringstream out;
  out << "node,count\n";
  for (const auto &[node, count] : counts) {
    if (node == kInvalidNode) continue;
    out << node << "," << count << "\n";
  }
  if (auto it = counts.find(kInvalidNode); it != counts.end()) {
    out << "invalid," << it->second << "\n";
  }
  return out.str();
}

std::string counts_to_json_text(const Counts &counts) {
  nlohmann::json j;
  std::int64_t shots = 0;
  nlohmann::json jc = nlohmann::json::object();
  for (const auto &[node, count] : counts) {
    jc[node == kInvalidNode ? "invalid" : std::to_string(node)] = count;
    shots += count;
  }
  j["counts"] = std::move(jc);
  j["shots"] = shots;
  return j.dump() + "\n";
}

void write_counts_csv(const Counts &counts, const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << counts_to_csv(counts);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace qwalknet
