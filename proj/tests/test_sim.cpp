// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "qwalknet/analysis.hpp"
#include "qwalknet/decompose.hpp"
#include "qwalknet/errors.hpp"
#include "qwalknet/graph.hpp"
#include "qwalknet/simulate.hpp"
#include "qwalknet/walk_builder.hpp"
#include "test_helpers.hpp"

using namespace qwalknet;

TEST_CASE("empty circuit leaves |0...0>") {
  Circuit c;
  c.n_qubits = 2;
  const SimResult r = simulate(c, 4);
  CHECK(std::abs(r.final_state.amps[0] - std::complex<double>(1, 0)) == 0.0);
  CHECK(r.node_probs[0] == 1.0);
}

TEST_CASE("H twice is the identity") {
  Circuit c;
  c.n_qubits = 1;
  c.gates.push_back(GateOp{GateKind::H, {0}, {}, {}});
  c.gates.push_back(GateOp{GateKind::H, {0}, {}, {}});
  StateVector psi = StateVector::zero_state(1);
  for (const auto &g : c.gates) apply_gate(psi, g);
  CHECK(std::abs(psi.amps[0] - std::complex<double>(1, 0)) < 1e-15);
  CHECK(std::abs(psi.amps[1]) < 1e-15);
}

TEST_CASE("per-gate norm preservation on a random circuit") {
  Rng rng(4);
  StateVector psi = qwalknet::test::random_state(5, 99);
  const std::vector<GateKind> kinds = {GateKind::Rx, GateKind::Ry, GateKind::Rz,
                                       GateKind::Phase, GateKind::H, GateKind::X,
                                       GateKind::Cx, GateKind::Swap};
  for (int step = 0; step < 200; ++step) {
    const GateKind kind = kinds[rng.below(kinds.size())];
    GateOp g;
    g.kind = kind;
    const int a = static_cast<int>(rng.below(5));
    int b = static_cast<int>(rng.below(5));
    while (b == a) b = static_cast<int>(rng.below(5));
    if (kind == GateKind::Cx || kind == GateKind::Swap) {
      g.qubits = {a, b};
    } else {
      g.qubits = {a};
      if (kind == GateKind::Rx || kind == GateKind::Ry ||
          kind == GateKind::Rz || kind == GateKind::Phase) {
        g.params = {rng.uniform() * 6.0 - 3.0};
      }
    }
    apply_gate(psi, g);
    CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("width cap is enforced") {
  Circuit c;
  c.n_qubits = 10;
  CHECK_THROWS_AS(simulate(c, 4, 8), ResourceError);
  CHECK_NOTHROW(simulate(c, 4, 10));
}

TEST_CASE("QWALKNET_QUBIT_CAP overrides the default cap") {
  CHECK(simulator_qubit_cap() == 24);
  setenv("QWALKNET_QUBIT_CAP", "6", 1);
  CHECK(simulator_qubit_cap() == 6);
  Circuit c;
  c.n_qubits = 8;
  CHECK_THROWS_AS(simulate(c, 4), ResourceError);
  unsetenv("QWALKNET_QUBIT_CAP");
  CHECK(simulator_qubit_cap() == 24);
}

TEST_CASE("sampling a point distribution") {
  Circuit c;
  c.n_qubits = 2;
  const SimResult r = simulate(c, 2);
  const Counts counts = sample(r, 100, 5);
  REQUIRE(counts.size() == 1);
  CHECK(counts.at(0) == 100);
}

TEST_CASE("sampling rejects zero shots") {
  Circuit c;
  c.n_qubits = 2;
  const SimResult r = simulate(c, 2);
  CHECK_THROWS_AS(sample(r, 0, 1), UsageError);
}

TEST_CASE("large-shot sampling concentrates on the exact distribution") {
  // uniform over 4 nodes via H on both position qubits, y untouched
  Circuit c;
  c.n_qubits = 4;
  c.gates.push_back(GateOp{GateKind::H, {0}, {}, {}});
  c.gates.push_back(GateOp{GateKind::H, {1}, {}, {}});
  const SimResult r = simulate(c, 4);
  const Counts counts = sample(r, 1000000, 12);
  std::vector<std::int64_t> by_node(4, 0);
  for (const auto &[node, count] : counts) by_node.at(node) = count;
  const double l1 = l1_distance(counts_to_probs(by_node), r.node_probs);
  CHECK(l1 <= 0.005);
}

TEST_CASE("sampling is deterministic per seed") {
  Circuit c;
  c.n_qubits = 2;
  c.gates.push_back(GateOp{GateKind::H, {0}, {}, {}});
  const SimResult r = simulate(c, 2);
  CHECK(sample(r, 1000, 3) == sample(r, 1000, 3));
  CHECK(sample(r, 1000, 3) != sample(r, 1000, 4));
}

TEST_CASE("noiseless trajectory sampling equals the plain sampler bit for bit") {
  const Graph g = generate_ws(8, 2, 0.2, 5);
  const Circuit basis = decompose_to_basis(build_walk_circuit(g, 1));
  const SimResult exact = simulate(basis, g.n_nodes);
  const Counts direct = sample(exact, 2000, 17);
  const Counts via_noisy = simulate_noisy(basis, g.n_nodes, NoiseModel{0.0},
                                          2000, 17);
  CHECK(direct == via_noisy);
}

TEST_CASE("noisy simulation requires a basis circuit") {
  const Graph g = generate_ws(8, 2, 0.2, 5);
  const Circuit logical = build_walk_circuit(g, 1);
  CHECK_THROWS_AS(simulate_noisy(logical, g.n_nodes, NoiseModel{0.01}, 10, 1),
                  UsageError);
}

TEST_CASE("heavy noise flattens the measured distribution") {
  const Graph g = generate_ws(8, 2, 0.2, 5);
  const Circuit basis = decompose_to_basis(build_walk_circuit(g, 1));
  // epsilon * gate count >> 3: the measured register is near uniform over
  // all 2^n patterns. Chi-square against uniform with df = 7 at the 99.9%
  // quantile (24.3), scaled leniently since the state is only approximately
  // maximally mixed.
  const double eps = 5.0 / static_cast<double>(basis.gates.size()) * 3.0;
  const std::int64_t shots = 4096;
  const Counts counts = simulate_noisy(basis, g.n_nodes, NoiseModel{eps},
                                       shots, 23);
  std::vector<double> observed(8, 0.0);
  for (const auto &[node, count] : counts) {
    observed.at(node == kInvalidNode ? 0 : node) += count;  // N = 2^n here
  }
  const double expected = static_cast<double>(shots) / 8.0;
  double chi2 = 0.0;
  for (double o : observed) {
    chi2 += (o - expected) * (o - expected) / expected;
  }
  CHECK(chi2 < 50.0);
}

TEST_CASE("counts serialization") {
  Counts counts{{0, 5}, {2, 3}, {kInvalidNode, 1}};
  const std::string csv = counts_to_csv(counts);
  CHECK(csv == "node,count\n0,5\n2,3\ninvalid,1\n");
  const std::string json = counts_to_json_text(counts);
  CHECK(json.find("\"invalid\":1") != std::string::npos);
  CHECK(json.find("\"shots\":9") != std::string::npos);
}
