// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "qwalknet/decompose.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>

#include "qwalknet/errors.hpp"

// Lowering scheme
// ---------------
// Every multi-controlled gate is reduced to {1q rotations, H, X, CX} with no
// ancilla qubits, through these recursions:
//
//   *  on-0 controls are X-conjugated away first;
//   *  C^m Ry(t) = Ry(t/2) . MCX . Ry(-t/2) . MCX   (same for Rz; Rx and H
//      are axis-conjugated onto Rz / a phase flip);
//   *  C^m Phase(l) peels one control per step:
//      C^m P(l) = C^m Rz(l) . C^{m-1} P(l/2) on the last control;
//   *  MCX with at least one spare qubit uses the borrowed-qubit Toffoli
//      ladder (4(m-2) Toffolis, spare qubits may hold arbitrary states) or,
//      when spares are scarce, one balanced split into four half-size MCXs;
//   *  MCX spanning every qubit becomes H . C^m Phase(pi) . H;
//   *  Toffoli is the standard 6-CX network, SWAP the 3-CX identity.
//
// Two structure-aware fusions run before per-gate lowering, driven by the
// (block, layer) tags the walk builders attach. Within one block, gates with
// distinct control patterns act on orthogonal subspaces and commute, so the
// block is stably regrouped by layer; a regrouped run of multi-controlled RY
// gates that shares a control set and target is one multiplexed rotation and
// lowers to a Gray-code CX/RY chain (2^m CX for the whole run), and a run of
// controlled phase flips over a shared qubit set lowers to a minimal cube
// cover of its pattern set. Both fusions reproduce the per-gate semantics
// exactly; they only change the gate count.

namespace qwalknet {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kAngleEps = 1e-14;

struct Lowerer {
  int n_qubits = 0;
  std::vector<GateOp> out;

  // --- primitive emission with a small peephole ------------------------
  // Adjacent identical X/H/CX pairs cancel and adjacent same-axis rotations
  // on the same lone target merge; this mops up polarity conjugations
  // between consecutive gates of a dispatch run.

  void emit(GateOp g) {
    if (!out.empty()) {
      const GateOp &prev = out.back();
      const bool involution = g.kind == GateKind::X || g.kind == GateKind::H ||
                              g.kind == GateKind::Cx;
      if (involution && g.controls.empty() && prev == g) {
        out.pop_back();
        return;
      }
      const bool rotation = g.kind == GateKind::Rx || g.kind == GateKind::Ry ||
                            g.kind == GateKind::Rz ||
                            (g.kind == GateKind::Phase && !g.qubits.empty());
      if (rotation && g.controls.empty() && prev.kind == g.kind &&
          prev.controls.empty() && prev.qubits == g.qubits) {
        const double merged = prev.params[0] + g.params[0];
        out.pop_back();
        if (std::abs(merged) > kAngleEps) {
          g.params[0] = merged;
          out.push_back(std::move(g));
        }
        return;
      }
    }
    out.push_back(std::move(g));
  }

  void rot(GateKind kind, int q, double angle) {
    if (std::abs(angle) <= kAngleEps) return;
    emit(GateOp{kind, {q}, {angle}, {}});
  }
  void x(int q) { emit(GateOp{GateKind::X, {q}, {}, {}}); }
  void h(int q) { emit(GateOp{GateKind::H, {q}, {}, {}}); }
  void cx(int c, int t) { emit(GateOp{GateKind::Cx, {c, t}, {}, {}}); }
  void phase(int q, double lambda) {
    if (std::abs(lambda) <= kAngleEps) return;
    emit(GateOp{GateKind::Phase, {q}, {lambda}, {}});
  }
  void global_phase(double lambda) {
    if (std::abs(lambda) <= kAngleEps) return;
    emit(GateOp{GateKind::Phase, {}, {lambda}, {}});
  }

  void toffoli(int a, int b, int t) {
    h(t);
    cx(b, t);
    phase(t, -kPi / 4);
    cx(a, t);
    phase(t, kPi / 4);
    cx(b, t);
    phase(t, -kPi / 4);
    cx(a, t);
    phase(b, kPi / 4);
    phase(t, kPi / 4);
    h(t);
    cx(a, b);
    phase(a, kPi / 4);
    phase(b, -kPi / 4);
    cx(a, b);
  }

  // --- multi-controlled X ----------------------------------------------

  std::vector<int> spare_qubits(const std::vector<int> &controls,
                                int target) const {
    std::vector<bool> used(n_qubits, false);
    for (int c : controls) used[c] = true;
    used[target] = true;
    std::vector<int> spare;
    for (int q = 0; q < n_qubits; ++q) {
      if (!used[q]) spare.push_back(q);
    }
    return spare;
  }

  // Borrowed-qubit ladder: [L1 P L1 P] where L1 = Toff(c_last, w_last, t)
  // and P descends the work chain, applies Toff(c0, c1, w0) and ascends.
  // Net effect is exactly C^m X; the works return to their input states.
  void mcx_ladder(const std::vector<int> &c, int t,
                  const std::vector<int> &w) {
    const int m = static_cast<int>(c.size());
    auto pyramid = [&] {
      for (int j = m - 2; j >= 2; --j) toffoli(c[j], w[j - 2], w[j - 1]);
      toffoli(c[0], c[1], w[0]);
      for (int j = 2; j <= m - 2; ++j) toffoli(c[j], w[j - 2], w[j - 1]);
    };
    toffoli(c[m - 1], w[m - 3], t);
    pyramid();
    toffoli(c[m - 1], w[m - 3], t);
    pyramid();
  }

  void mcx(std::vector<int> controls, int t) {
    const int m = static_cast<int>(controls.size());
    if (m == 0) {
      x(t);
      return;
    }
    if (m == 1) {
      cx(controls[0], t);
      return;
    }
    if (m == 2) {
      toffoli(controls[0], controls[1], t);
      return;
    }
    const std::vector<int> spare = spare_qubits(controls, t);
    if (static_cast<int>(spare.size()) >= m - 2) {
      mcx_ladder(controls, t,
                 std::vector<int>(spare.begin(), spare.begin() + (m - 2)));
      return;
    }
    if (!spare.empty()) {
      // Balanced split through one borrowed qubit; each half then has
      // enough spares (the other half's controls) for the ladder.
      const int w = spare.front();
      const int m1 = (m + 1) / 2;
      std::vector<int> lo(controls.begin(), controls.begin() + m1);
      std::vector<int> hi(controls.begin() + m1, controls.end());
      hi.push_back(w);
      mcx(lo, w);
      mcx(hi, t);
      mcx(lo, w);
      mcx(hi, t);
      return;
    }
    // Gate spans every qubit: X = H Z H and peel the phase.
    h(t);
    mc_phase(kPi, controls, t);
    h(t);
  }

  // --- multi-controlled rotations ---------------------------------------

  // Holds for axes that anticommute with X (Ry, Rz):
  // C^m R(t) = [R(t/2); MCX; R(-t/2); MCX] in emission order.
  void mc_axis_rotation(GateKind kind, double theta, std::vector<int> controls,
                        int t) {
    const int m = static_cast<int>(controls.size());
    if (std::abs(theta) <= kAngleEps) return;
    if (m == 0) {
      rot(kind, t, theta);
      return;
    }
    if (spare_qubits(controls, t).empty() && m >= 2) {
      // Full-width gate: peel one control with CX conjugation instead, so
      // the inner rotations see a spare qubit.
      const int last = controls.back();
      controls.pop_back();
      mc_axis_rotation(kind, theta / 2, controls, t);
      cx(last, t);
      mc_axis_rotation(kind, -theta / 2, controls, t);
      cx(last, t);
      return;
    }
    rot(kind, t, theta / 2);
    mcx(controls, t);
    rot(kind, t, -theta / 2);
    mcx(controls, t);
  }

  void mc_ry(double theta, const std::vector<int> &controls, int t) {
    mc_axis_rotation(GateKind::Ry, theta, controls, t);
  }
  void mc_rz(double theta, const std::vector<int> &controls, int t) {
    mc_axis_rotation(GateKind::Rz, theta, controls, t);
  }
  void mc_rx(double theta, const std::vector<int> &controls, int t) {
    h(t);
    mc_rz(theta, controls, t);
    h(t);
  }

  // C^m Phase(l) = C^m Rz(l) then C^{m-1} Phase(l/2) on the last control.
  void mc_phase(double lambda, std::vector<int> controls, int t) {
    if (std::abs(lambda) <= kAngleEps) return;
    if (controls.empty()) {
      phase(t, lambda);
      return;
    }
    mc_rz(lambda, controls, t);
    const int next_target = controls.back();
    controls.pop_back();
    mc_phase(lambda / 2, std::move(controls), next_target);
  }

  // H = Ry(pi/4) Z Ry(-pi/4) as an operator product.
  void mc_h(const std::vector<int> &controls, int t) {
    rot(GateKind::Ry, t, -kPi / 4);
    mc_phase(kPi, controls, t);
    rot(GateKind::Ry, t, kPi / 4);
  }

  // Phase on every basis state matching the all-on-1 control set.
  void controlled_global_phase(double lambda, std::vector<int> controls) {
    if (controls.empty()) {
      global_phase(lambda);
      return;
    }
    const int t = controls.back();
    controls.pop_back();
    mc_phase(lambda, std::move(controls), t);
  }

  // --- per-gate entry ----------------------------------------------------

  void lower_gate(const GateOp &g) {
    if (g.is_basis()) {
      emit(g);
      return;
    }
    if (g.kind == GateKind::Swap && g.controls.empty()) {
      cx(g.qubits[0], g.qubits[1]);
      cx(g.qubits[1], g.qubits[0]);
      cx(g.qubits[0], g.qubits[1]);
      return;
    }

    // Normalize polarity: X-conjugate all on-0 controls.
    std::vector<int> on1;
    std::vector<int> flipped;
    for (const Control &c : g.controls) {
      on1.push_back(c.qubit);
      if (!c.on_one) flipped.push_back(c.qubit);
    }
    for (int q : flipped) x(q);

    switch (g.kind) {
      case GateKind::X:
        mcx(on1, g.qubits[0]);
        break;
      case GateKind::Cx: {
        std::vector<int> controls = on1;
        controls.push_back(g.qubits[0]);
        mcx(controls, g.qubits[1]);
        break;
      }
      case GateKind::Swap: {
        std::vector<int> controls = on1;
        controls.push_back(g.qubits[0]);
        cx(g.qubits[1], g.qubits[0]);
        mcx(controls, g.qubits[1]);
        cx(g.qubits[1], g.qubits[0]);
        break;
      }
      case GateKind::Ry:
        mc_ry(g.params[0], on1, g.qubits[0]);
        break;
      case GateKind::Rz:
        mc_rz(g.params[0], on1, g.qubits[0]);
        break;
      case GateKind::Rx:
        mc_rx(g.params[0], on1, g.qubits[0]);
        break;
      case GateKind::H:
        mc_h(on1, g.qubits[0]);
        break;
      case GateKind::Phase:
        if (g.qubits.empty()) {
          controlled_global_phase(g.params[0], on1);
        } else {
          mc_phase(g.params[0], on1, g.qubits[0]);
        }
        break;
    }

    for (int q : flipped) x(q);
  }

  // --- Gray-code multiplexed rotation ------------------------------------

  // Lowers a run of multi-controlled RY gates sharing (control set, target)
  // as one multiplexor: for k = 0..2^m-1 emit Ry(phi_k) then a CX from the
  // select qubit of the Gray transition. phi is the scaled Walsh transform
  // of the per-pattern angles; absent patterns contribute angle zero.
  void mux_ry(const std::vector<int> &selects, int t,
              const std::vector<double> &pattern_angles) {
    const int m = static_cast<int>(selects.size());
    const std::size_t size = std::size_t{1} << m;
    std::vector<double> phi(size, 0.0);
    for (std::size_t k = 0; k < size; ++k) {
      const std::size_t gray = k ^ (k >> 1);
      double sum = 0.0;
      for (std::size_t c = 0; c < size; ++c) {
        const int parity = std::popcount(gray & c) & 1;
        sum += parity ? -pattern_angles[c] : pattern_angles[c];
      }
      phi[k] = sum / static_cast<double>(size);
    }
    for (std::size_t k = 0; k < size; ++k) {
      rot(GateKind::Ry, t, phi[k]);
      int flip_bit;
      if (k + 1 < size) {
        flip_bit = std::countr_zero(k + 1);
      } else {
        flip_bit = m - 1;  // closing CX on the most significant select
      }
      // Pattern bit b corresponds to select qubit m-1-b (MSB first).
      cx(selects[m - 1 - flip_bit], t);
    }
  }
};

// --- cost model mirroring the recursions ----------------------------------

long estimate_toffoli_cx() { return 6; }

long estimate_mcx(int m, int n_free);

long estimate_mc_phase_cx(int m, int n_total_qubits) {
  // Peeling: sum of C^k Rz costs for k = m..1.
  long cost = 0;
  for (int k = m; k >= 1; --k) {
    const int free_for_rz = n_total_qubits - k - 1;
    if (free_for_rz <= 0 && k >= 2) {
      cost += 2 + 2 * (2 * estimate_mcx(k - 1, 1) + 2);
    } else {
      cost += 2 * estimate_mcx(k, free_for_rz);
    }
  }
  return cost;
}

long estimate_mcx(int m, int n_free) {
  if (m <= 0) return 0;
  if (m == 1) return 1;
  if (m == 2) return estimate_toffoli_cx();
  if (n_free >= m - 2) return 4 * (m - 2) * estimate_toffoli_cx();
  if (n_free >= 1) {
    const int m1 = (m + 1) / 2;
    const int m2 = m - m1 + 1;
    return 2 * (estimate_mcx(m1, m - m1 + n_free) +
                estimate_mcx(m2, m1 + n_free - 1));
  }
  return 2 + estimate_mc_phase_cx(m, m + 1);
}

// --- fusion pass ------------------------------------------------------------

struct Bucket {
  std::size_t begin = 0;
  std::size_t end = 0;  // half-open range into the regrouped gate list
};

std::vector<int> sorted_control_qubits(const GateOp &g) {
  std::vector<int> qs;
  qs.reserve(g.controls.size());
  for (const auto &c : g.controls) qs.push_back(c.qubit);
  std::sort(qs.begin(), qs.end());
  return qs;
}

std::size_t control_pattern(const GateOp &g, const std::vector<int> &set) {
  // Bit m-1-u of the pattern is the polarity of the control on set[u].
  const int m = static_cast<int>(set.size());
  std::size_t pattern = 0;
  for (const auto &c : g.controls) {
    const auto it = std::lower_bound(set.begin(), set.end(), c.qubit);
    const int u = static_cast<int>(it - set.begin());
    if (c.on_one) pattern |= std::size_t{1} << (m - 1 - u);
  }
  return pattern;
}

bool same_bucket(const GateOp &a, const GateOp &b) {
  if (a.block < 0 || a.block != b.block || a.layer != b.layer) return false;
  if (a.kind != b.kind) return false;
  if (a.qubits != b.qubits) return false;
  return sorted_control_qubits(a) == sorted_control_qubits(b);
}

// Recursive disjoint cube cover of a pattern set. Splitting on the leading
// bit; when both halves hold the same sub-patterns the bit is a don't-care
// and is dropped, which finds factorized structure (such as "any position,
// coin register zero") wherever the free bits sit. Emits one phase gate per
// cube.
void emit_phase_cubes(Lowerer &lw, const std::vector<int> &set,
                      std::size_t first_bit, std::vector<Control> &cares,
                      std::vector<std::size_t> patterns, double lambda) {
  if (patterns.empty()) return;
  if (first_bit == set.size()) {
    std::vector<int> on1;
    std::vector<int> flipped;
    for (const Control &c : cares) {
      on1.push_back(c.qubit);
      if (!c.on_one) flipped.push_back(c.qubit);
    }
    for (int q : flipped) lw.x(q);
    lw.controlled_global_phase(lambda, on1);
    for (int q : flipped) lw.x(q);
    return;
  }
  // Patterns are relative to the remaining bits; strip the leading one.
  const int remaining = static_cast<int>(set.size() - first_bit);
  const std::size_t msb = std::size_t{1} << (remaining - 1);
  std::vector<std::size_t> zeros, ones;
  for (std::size_t p : patterns) {
    if (p & msb) {
      ones.push_back(p & ~msb);
    } else {
      zeros.push_back(p);
    }
  }
  if (zeros == ones) {  // bit is free
    emit_phase_cubes(lw, set, first_bit + 1, cares, std::move(zeros), lambda);
    return;
  }
  cares.push_back(Control{set[first_bit], false});
  emit_phase_cubes(lw, set, first_bit + 1, cares, std::move(zeros), lambda);
  cares.back().on_one = true;
  emit_phase_cubes(lw, set, first_bit + 1, cares, std::move(ones), lambda);
  cares.pop_back();
}

bool lower_ry_bucket(Lowerer &lw, const std::vector<GateOp> &gates,
                     const Bucket &b) {
  const GateOp &head = gates[b.begin];
  if (head.kind != GateKind::Ry || head.controls.empty()) return false;
  const std::vector<int> set = sorted_control_qubits(head);
  const int m = static_cast<int>(set.size());
  if (m > 24) return false;
  const std::size_t size = std::size_t{1} << m;

  long per_gate_cost = 0;
  const long mux_cost = 2 * static_cast<long>(size);
  const int n_free = lw.n_qubits - m - 1;
  for (std::size_t i = b.begin; i < b.end; ++i) {
    per_gate_cost += 2 * estimate_mcx(m, n_free) + 2;
    if (per_gate_cost > mux_cost) break;
  }
  if (per_gate_cost <= mux_cost) return false;

  std::vector<double> angles(size, 0.0);
  for (std::size_t i = b.begin; i < b.end; ++i) {
    angles[control_pattern(gates[i], set)] += gates[i].params[0];
  }
  lw.mux_ry(set, head.qubits[0], angles);
  return true;
}

bool lower_phase_bucket(Lowerer &lw, const std::vector<GateOp> &gates,
                        const Bucket &b) {
  const GateOp &head = gates[b.begin];
  if (head.kind != GateKind::Phase || !head.qubits.empty() ||
      head.controls.empty()) {
    return false;
  }
  if (b.end - b.begin < 2) return false;
  const double lambda = head.params[0];
  const std::vector<int> set = sorted_control_qubits(head);
  const int m = static_cast<int>(set.size());
  if (m > 24) return false;
  std::vector<std::size_t> patterns;
  patterns.reserve(b.end - b.begin);
  for (std::size_t i = b.begin; i < b.end; ++i) {
    if (gates[i].params[0] != lambda) return false;  // mixed angles: per-gate
    patterns.push_back(control_pattern(gates[i], set));
  }
  std::sort(patterns.begin(), patterns.end());
  if (std::adjacent_find(patterns.begin(), patterns.end()) != patterns.end()) {
    return false;  // repeated pattern: per-gate
  }
  std::vector<Control> cares;
  emit_phase_cubes(lw, set, 0, cares, std::move(patterns), lambda);
  return true;
}

}  // namespace

long estimate_mcx_cx_cost(int n_controls, int n_free) {
  return estimate_mcx(n_controls, n_free);
}

Circuit decompose_to_basis(const Circuit &c) {
  validate_circuit(c);
  Lowerer lw;
  lw.n_qubits = c.n_qubits;
  lw.out.reserve(c.gates.size() * 4);

  // Regroup tagged blocks by layer (stable, so gates sharing a control
  // pattern keep their order), then fuse bucket runs.
  std::vector<GateOp> gates;
  gates.reserve(c.gates.size());
  std::size_t i = 0;
  while (i < c.gates.size()) {
    if (c.gates[i].block < 0) {
      gates.push_back(c.gates[i]);
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < c.gates.size() && c.gates[j].block == c.gates[i].block) ++j;
    std::vector<GateOp> region(c.gates.begin() + i, c.gates.begin() + j);
    std::stable_sort(region.begin(), region.end(),
                     [](const GateOp &a, const GateOp &b) {
                       return a.layer < b.layer;
                     });
    gates.insert(gates.end(), region.begin(), region.end());
    i = j;
  }

  i = 0;
  while (i < gates.size()) {
    Bucket b{i, i + 1};
    if (gates[i].block >= 0) {
      while (b.end < gates.size() && same_bucket(gates[i], gates[b.end])) {
        ++b.end;
      }
    }
    if (!lower_ry_bucket(lw, gates, b) && !lower_phase_bucket(lw, gates, b)) {
      for (std::size_t g = b.begin; g < b.end; ++g) lw.lower_gate(gates[g]);
    }
    i = b.end;
  }

  Circuit basis;
  basis.n_qubits = c.n_qubits;
  basis.meta = c.meta;
  basis.gates = std::move(lw.out);
  validate_circuit(basis);
  return basis;
}

}  // namespace qwalknet
