// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <complex>

#include "qwalknet/errors.hpp"
#include "qwalknet/graph.hpp"
#include "qwalknet/oracle.hpp"
#include "qwalknet/simulate.hpp"
#include "qwalknet/walk_builder.hpp"
#include "test_helpers.hpp"

using namespace qwalknet;
using qwalknet::test::apply_all;
using qwalknet::test::max_amp_diff;
using qwalknet::test::random_state;

namespace {

Graph path2() { return Graph::from_edges(2, {{0, 1}}); }

Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  }
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(n, edges);
}

StateVector run_from_zero(const std::vector<GateOp> &gates, int n_qubits) {
  return apply_all(gates, StateVector::zero_state(n_qubits));
}

}  // namespace

TEST_CASE("u1 on a power of two is a Hadamard layer") {
  const auto gates = build_u1(8);
  REQUIRE(gates.size() == 3);
  for (const auto &g : gates) CHECK(g.kind == GateKind::H);

  const auto one = build_u1(2);
  REQUIRE(one.size() == 1);
  CHECK(one[0].kind == GateKind::H);

  const StateVector psi = run_from_zero(gates, 3);
  for (const auto &a : psi.amps) {
    CHECK(std::abs(a - std::complex<double>(1 / std::sqrt(8.0), 0)) < 1e-14);
  }
}

TEST_CASE("u1 for N=10 loads the padded uniform distribution") {
  const auto gates = build_u1(10);
  const StateVector psi = run_from_zero(gates, 4);
  for (int i = 0; i < 16; ++i) {
    const double expect = i < 10 ? 1.0 / std::sqrt(10.0) : 0.0;
    CHECK(std::abs(psi.amps[i].real() - expect) < 1e-12);
    CHECK(std::abs(psi.amps[i].imag()) < 1e-15);
  }
}

TEST_CASE("state prep of a point distribution is empty") {
  CHECK(build_state_prep({1.0, 0.0, 0.0, 0.0}, {0, 1}).empty());
}

TEST_CASE("state prep of (0.5, 0.5) is a single Ry(pi/2)") {
  const auto gates = build_state_prep({0.5, 0.5}, {0});
  REQUIRE(gates.size() == 1);
  CHECK(gates[0].kind == GateKind::Ry);
  CHECK(gates[0].params[0] == doctest::Approx(M_PI / 2));
  const StateVector psi = run_from_zero(gates, 1);
  CHECK(std::abs(psi.amps[0].real() - 1 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(psi.amps[1].real() - 1 / std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("state prep rejects unnormalized input") {
  CHECK_THROWS_AS(build_state_prep({0.5, 0.4}, {0}), UsageError);
  CHECK_THROWS_AS(build_state_prep({0.5, -0.5}, {0}), UsageError);
  CHECK_THROWS_AS(build_state_prep({1.0, 0.0, 0.0}, {0, 1}), UsageError);
}

TEST_CASE("state prep loads neighbor distributions exactly") {
  const Graph g = generate_er(10, 0.3, 42);
  const int n = qubits_per_register(g.n_nodes);
  for (int i = 0; i < g.n_nodes; ++i) {
    std::vector<double> dist(1 << n, 0.0);
    for (int j : g.adjacency[i]) dist[j] = 1.0 / g.degree(i);
    std::vector<int> qubits(n);
    for (int q = 0; q < n; ++q) qubits[q] = q;
    const StateVector psi = run_from_zero(build_state_prep(dist, qubits), n);
    for (int j = 0; j < (1 << n); ++j) {
      const double expect =
          g.has_edge(i, j) && j < g.n_nodes ? 1.0 / std::sqrt(double(g.degree(i))) : 0.0;
      CHECK(std::abs(psi.amps[j].real() - expect) < 1e-10);
      CHECK(std::abs(psi.amps[j].imag()) < 1e-15);
    }
  }
}

TEST_CASE("controlled U2 prepares the walk superposition") {
  SUBCASE("P2") {
    std::vector<GateOp> gates = build_u1(2);
    auto u2 = build_controlled_u2(path2());
    gates.insert(gates.end(), u2.begin(), u2.end());
    const StateVector psi = run_from_zero(gates, 2);
    const StateVector expect = oracle::initial_state(path2());
    CHECK(max_amp_diff(psi, expect) < 1e-12);
  }
  SUBCASE("C4 matches the oracle") {
    const Graph g = cycle(4);
    std::vector<GateOp> gates = build_u1(4);
    auto u2 = build_controlled_u2(g);
    gates.insert(gates.end(), u2.begin(), u2.end());
    const StateVector psi = run_from_zero(gates, 4);
    CHECK(max_amp_diff(psi, oracle::initial_state(g)) < 1e-12);
  }
  SUBCASE("ER(10,0.3,42) matches the oracle") {
    const Graph g = generate_er(10, 0.3, 42);
    std::vector<GateOp> gates = build_u1(10);
    auto u2 = build_controlled_u2(g);
    gates.insert(gates.end(), u2.begin(), u2.end());
    const StateVector psi = run_from_zero(gates, 8);
    CHECK(max_amp_diff(psi, oracle::initial_state(g)) < 1e-10);
  }
}

TEST_CASE("coin circuit blocks act like the dense coin") {
  SUBCASE("degree-2 node swaps its two directions") {
    const Graph g = cycle(4);
    const auto coin = build_coin_circuit(g);
    // |x=0>|y=1> -> |x=0>|y=3> for node 0 with neighbors {1, 3}
    StateVector psi = StateVector::zero_state(4);
    psi.amps[0] = 0;
    psi.amps[0 * 4 + 1] = 1.0;
    psi = apply_all(coin, psi);
    CHECK(std::abs(psi.amps[0 * 4 + 3] - std::complex<double>(1, 0)) < 1e-10);
  }
  SUBCASE("degree-1 node fixes its neighbor direction") {
    const auto coin = build_coin_circuit(path2());
    StateVector psi = StateVector::zero_state(2);
    psi.amps[0] = 0;
    psi.amps[1] = 1.0;  // |0>|1>
    psi = apply_all(coin, psi);
    CHECK(std::abs(psi.amps[1] - std::complex<double>(1, 0)) < 1e-10);
    // and flips the sign of the invalid direction |0>|0>
    StateVector invalid = StateVector::zero_state(2);
    invalid = apply_all(coin, invalid);
    CHECK(std::abs(invalid.amps[0] + std::complex<double>(1, 0)) < 1e-10);
  }
  SUBCASE("random valid states agree with the dense coin on ER(10,0.3,42)") {
    const Graph g = generate_er(10, 0.3, 42);
    const auto ops = oracle::build_walk_operators(g);
    const auto coin = build_coin_circuit(g);
    for (int trial = 0; trial < 50; ++trial) {
      // random state supported on valid directed edges
      StateVector psi;
      psi.n_qubits = 8;
      psi.amps.assign(256, {0, 0});
      Rng rng(1000 + trial);
      double norm2 = 0.0;
      for (int i = 0; i < 10; ++i) {
        for (int j : g.adjacency[i]) {
          const std::complex<double> a{rng.uniform() - 0.5, rng.uniform() - 0.5};
          psi.amps[i * 16 + j] = a;
          norm2 += std::norm(a);
        }
      }
      for (auto &a : psi.amps) a /= std::sqrt(norm2);

      Eigen::Map<const Eigen::VectorXcd> v(psi.amps.data(), 256);
      const Eigen::VectorXcd expect = ops.coin * v;
      const StateVector got = apply_all(coin, psi);
      double worst = 0.0;
      for (int idx = 0; idx < 256; ++idx) {
        worst = std::max(worst, std::abs(got.amps[idx] - expect[idx]));
      }
      CHECK(worst < 1e-9);
    }
  }
}

TEST_CASE("shift circuit is the register swap") {
  for (int n = 1; n <= 4; ++n) {
    const auto gates = build_shift_circuit(n);
    CHECK(gates.size() == static_cast<std::size_t>(n));
    const int block = 1 << n;
    for (int i = 0; i < block; ++i) {
      for (int j = 0; j < block; ++j) {
        StateVector psi;
        psi.n_qubits = 2 * n;
        psi.amps.assign(std::size_t{1} << (2 * n), {0, 0});
        psi.amps[static_cast<std::size_t>(i) * block + j] = 1.0;
        psi = apply_all(gates, psi);
        CHECK(std::abs(psi.amps[static_cast<std::size_t>(j) * block + i] -
                       std::complex<double>(1, 0)) < 1e-15);
      }
    }
  }
}

TEST_CASE("walk circuit at t=0 reproduces the oracle initial state") {
  const Graph g = path2();
  const Circuit c = build_walk_circuit(g, 0);
  const StateVector psi = run_from_zero(c.gates, c.n_qubits);
  CHECK(max_amp_diff(psi, oracle::initial_state(g)) < 1e-12);
}

TEST_CASE("walk circuit matches the oracle for ER(10,0.3,42), t=1..4") {
  const Graph g = generate_er(10, 0.3, 42);
  for (int t = 1; t <= 4; ++t) {
    const Circuit c = build_walk_circuit(g, t);
    CHECK(c.n_qubits == 8);
    const StateVector psi = run_from_zero(c.gates, c.n_qubits);
    const StateVector expect = oracle::evolve(g, t);
    CHECK(max_amp_diff(psi, expect) < 1e-8);
  }
}

TEST_CASE("walk circuit width follows 2*ceil(log2 N)") {
  CHECK(build_walk_circuit(generate_er(10, 0.3, 42), 1).n_qubits == 8);
  CHECK(build_walk_circuit(path2(), 1).n_qubits == 2);
  CHECK(build_walk_circuit(cycle(8), 2).n_qubits == 6);
}

TEST_CASE("walk circuit construction is deterministic") {
  const Graph g = generate_ws(8, 4, 0.2, 5);
  const Circuit a = build_walk_circuit(g, 2);
  const Circuit b = build_walk_circuit(g, 2);
  CHECK(a == b);
}

TEST_CASE("N=100 circuit construction stays cheap") {
  const Graph g = generate_ba(100, 4, 11);
  const Circuit c = build_walk_circuit(g, 1);
  CHECK(c.n_qubits == 14);
  CHECK(c.gates.size() > 0);
}
