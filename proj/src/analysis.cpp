// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "qwalknet/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

#include "qwalknet/decompose.hpp"
#include "qwalknet/errors.hpp"
#include "qwalknet/oracle.hpp"
#include "qwalknet/resources.hpp"
#include "qwalknet/simulate.hpp"
#include "qwalknet/walk_builder.hpp"

namespace qwalknet {

double l1_distance(const std::vector<double> &p, const std::vector<double> &q) {
  if (p.size() != q.size()) {
    throw UsageError("l1_distance: length mismatch (" +
                     std::to_string(p.size()) + " vs " +
                     std::to_string(q.size()) + ")");
  }
  double sum_p = 0.0, sum_q = 0.0, diff = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    sum_p += p[i];
    sum_q += q[i];
    diff += std::abs(p[i] - q[i]);
  }
  if (std::abs(sum_p - 1.0) > 1e-6 || std::abs(sum_q - 1.0) > 1e-6) {
    throw UsageError("l1_distance inputs must sum to 1 within 1e-6");
  }
  return diff / 2.0;
}

std::vector<double> counts_to_probs(const std::vector<std::int64_t> &counts) {
  std::int64_t total = 0;
  for (auto c : counts) total += c;
  if (total <= 0) throw UsageError("cannot normalize empty counts");
  std::vector<double> probs(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    probs[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  }
  return probs;
}

FitResult fit_power_law(const std::vector<double> &xs,
                        const std::vector<double> &ys) {
  if (xs.size() != ys.size()) throw UsageError("fit: length mismatch");
  const int n = static_cast<int>(xs.size());
  if (n < 3) throw UsageError("fit needs at least 3 points");
  for (int i = 0; i < n; ++i) {
    if (xs[i] <= 0.0 || ys[i] <= 0.0) {
      throw UsageError("fit requires strictly positive data");
    }
  }

  double mx = 0.0, my = 0.0;
  std::vector<double> lx(n), ly(n);
  for (int i = 0; i < n; ++i) {
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (int i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0.0) throw UsageError("fit requires at least two distinct x");

  FitResult fit;
  fit.n_points = n;
  fit.b = sxy / sxx;
  const double intercept = my - fit.b * mx;
  fit.a = std::exp(intercept);

  double ssr = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = ly[i] - (intercept + fit.b * lx[i]);
    ssr += r * r;
  }
  const double sigma2 = ssr / std::max(1, n - 2);
  fit.stderr_b = std::sqrt(sigma2 / sxx);
  const double se_intercept = std::sqrt(sigma2 * (1.0 / n + mx * mx / sxx));
  fit.stderr_a = fit.a * se_intercept;
  fit.r_squared = syy == 0.0 ? 1.0 : 1.0 - ssr / syy;
  return fit;
}

namespace {

// Seed for the s-th instance at size N: decorrelates grid points while
// staying reproducible from the template seed.
std::uint64_t instance_seed(std::uint64_t base, int n, int s) {
  return base + 1000003ULL * static_cast<std::uint64_t>(n) +
         static_cast<std::uint64_t>(s);
}

struct DepthJob {
  int n_nodes = 0;
  int steps = 0;
  int seed_index = 0;
};

struct DepthOutcome {
  bool ok = false;
  ScalingRecord record;
  std::string warning;
};

DepthOutcome measure_depth(const GraphParams &tpl, const DepthJob &job) {
  DepthOutcome out;
  GraphParams params = tpl;
  params.n = job.n_nodes;
  params.seed = instance_seed(tpl.seed, job.n_nodes, job.seed_index);
  try {
    const Graph g = generate(params);
    const Circuit circuit = build_walk_circuit(g, job.steps);
    const Circuit basis = decompose_to_basis(circuit);
    out.record = ScalingRecord{params.model,
                               job.n_nodes,
                               job.steps,
                               params.seed,
                               circuit.n_qubits,
                               circuit_depth(basis.gates, basis.n_qubits),
                               0};
    for (const GateOp &g2 : basis.gates) {
      if (g2.kind == GateKind::Cx) ++out.record.cx_count;
    }
    out.ok = true;
  } catch (const std::exception &e) {
    std::ostringstream msg;
    msg << to_string(params.model) << " n=" << job.n_nodes
        << " seed=" << params.seed << " t=" << job.steps
        << " failed: " << e.what();
    out.warning = msg.str();
  }
  return out;
}

std::vector<DepthOutcome> run_jobs(const GraphParams &tpl,
                                   const std::vector<DepthJob> &jobs,
                                   int n_threads) {
  std::vector<DepthOutcome> outcomes(jobs.size());
  if (n_threads <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      outcomes[i] = measure_depth(tpl, jobs[i]);
    }
    return outcomes;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      outcomes[i] = measure_depth(tpl, jobs[i]);
    }
  };
  std::vector<std::thread> pool;
  const int count = std::min<int>(n_threads, static_cast<int>(jobs.size()));
  pool.reserve(count);
  for (int i = 0; i < count; ++i) pool.emplace_back(worker);
  for (auto &t : pool) t.join();
  return outcomes;
}

}  // namespace

ScalingResult run_n_scaling(const GraphParams &params_template,
                            const std::vector<int> &n_values, int steps,
                            int seeds_per_point, int jobs) {
  if (seeds_per_point < 1) throw UsageError("seeds_per_point must be >= 1");
  for (int n : n_values) {
    if (n < 4) throw UsageError("N grid entries must be >= 4");
  }

  std::vector<DepthJob> job_list;
  for (int n : n_values) {
    for (int s = 0; s < seeds_per_point; ++s) {
      job_list.push_back(DepthJob{n, steps, s});
    }
  }
  const auto outcomes = run_jobs(params_template, job_list, jobs);

  ScalingResult result;
  std::vector<double> xs, ys;
  std::size_t idx = 0;
  for (int n : n_values) {
    double sum = 0.0;
    int good = 0;
    for (int s = 0; s < seeds_per_point; ++s, ++idx) {
      const auto &o = outcomes[idx];
      if (o.ok) {
        result.records.push_back(o.record);
        sum += o.record.depth_basis;
        ++good;
      } else {
        result.warnings.push_back(o.warning);
      }
    }
    if (good > 0) {
      xs.push_back(n);
      ys.push_back(sum / good);
    }
  }
  result.fit = fit_power_law(xs, ys);
  return result;
}

TScalingResult run_t_scaling(const GraphParams &params_template, int n_nodes,
                             const std::vector<int> &t_values,
                             int seeds_per_point, int jobs) {
  if (t_values.size() < 2) throw UsageError("t grid needs at least 2 points");
  if (seeds_per_point < 1) throw UsageError("seeds_per_point must be >= 1");

  std::vector<DepthJob> job_list;
  for (int t : t_values) {
    if (t < 1) throw UsageError("t grid entries must be >= 1");
    for (int s = 0; s < seeds_per_point; ++s) {
      job_list.push_back(DepthJob{n_nodes, t, s});
    }
  }
  // Preparation-only depth per seed for the step-isolated fit.
  for (int s = 0; s < seeds_per_point; ++s) {
    job_list.push_back(DepthJob{n_nodes, 0, s});
  }
  const auto outcomes = run_jobs(params_template, job_list, jobs);

  TScalingResult result;
  std::vector<double> xs, ys_raw, ys_step;
  double depth0_sum = 0.0;
  int depth0_good = 0;
  const std::size_t t0_base = t_values.size() * seeds_per_point;
  for (int s = 0; s < seeds_per_point; ++s) {
    const auto &o = outcomes[t0_base + s];
    if (o.ok) {
      depth0_sum += o.record.depth_basis;
      ++depth0_good;
    } else {
      result.warnings.push_back(o.warning);
    }
  }
  if (depth0_good == 0) throw GenerationError("all t=0 baselines failed");
  const double depth0 = depth0_sum / depth0_good;
  result.depth_t0 = static_cast<int>(std::lround(depth0));

  std::size_t idx = 0;
  for (int t : t_values) {
    double sum = 0.0;
    int good = 0;
    for (int s = 0; s < seeds_per_point; ++s, ++idx) {
      const auto &o = outcomes[idx];
      if (o.ok) {
        result.records.push_back(o.record);
        sum += o.record.depth_basis;
        ++good;
      } else {
        result.warnings.push_back(o.warning);
      }
    }
    if (good > 0) {
      const double mean = sum / good;
      xs.push_back(t);
      ys_raw.push_back(mean);
      ys_step.push_back(mean - depth0);
    }
  }
  result.fit_raw = fit_power_law(xs, ys_raw);
  result.fit_step = fit_power_law(xs, ys_step);
  return result;
}

CompareResult compare_circuit_vs_oracle(const Graph &g, int t_max,
                                        std::int64_t shots,
                                        std::uint64_t seed) {
  if (g.n_nodes > 16) {
    throw ResourceError("comparison harness caps N at 16");
  }
  if (t_max < 1 || t_max > 8) {
    throw UsageError("t_max must be in [1, 8]");
  }

  CompareResult result;
  for (int t = 1; t <= t_max; ++t) {
    const StateVector exact = oracle::evolve(g, t);
    const std::vector<double> p_exact = node_probabilities(exact, g.n_nodes);

    const Circuit circuit = build_walk_circuit(g, t);
    const Circuit basis = decompose_to_basis(circuit);
    const SimResult sim = simulate(basis, g.n_nodes);

    result.l1_per_t.push_back(l1_distance(p_exact, sim.node_probs));

    std::vector<double> p_sampled = sim.node_probs;
    if (shots > 0) {
      const Counts counts = sample(sim, shots, seed + static_cast<std::uint64_t>(t));
      std::vector<std::int64_t> by_node(g.n_nodes, 0);
      for (const auto &[node, count] : counts) {
        if (node >= 0) by_node[node] = count;
      }
      p_sampled = counts_to_probs(by_node);
      result.l1_sampled_per_t.push_back(l1_distance(p_exact, p_sampled));
    }

    for (int node = 0; node < g.n_nodes; ++node) {
      result.rows.push_back(CompareRow{t, node, p_exact[node],
                                       sim.node_probs[node], p_sampled[node]});
    }
  }
  return result;
}

std::string scaling_records_to_csv(const std::vector<ScalingRecord> &records) {
  std::ostringstream out;
  out << "model,n,t,seed,width,depth_basis,cx_count\n";
  for (const auto &r : records) {
    out << to_string(r.model) << "," << r.n_nodes << "," << r.steps << ","
        << r.seed << "," << r.width << "," << r.depth_basis << ","
        << r.cx_count << "\n";
  }
  return out.str();
}

std::string fit_summary_to_csv(
    const std::vector<std::pair<std::string, FitResult>> &fits) {
  std::ostringstream out;
  out << "model,a,stderr_a,b,stderr_b,r2\n";
  out.precision(12);
  for (const auto &[label, fit] : fits) {
    out << label << "," << fit.a << "," << fit.stderr_a << "," << fit.b << ","
        << fit.stderr_b << "," << fit.r_squared << "\n";
  }
  return out.str();
}

std::string compare_rows_to_csv(const std::vector<CompareRow> &rows) {
  std::ostringstream out;
  out << "t,node,p_exact,p_circuit,p_sampled\n";
  out.precision(17);
  for (const auto &r : rows) {
    out << r.t << "," << r.node << "," << r.p_exact << "," << r.p_circuit
        << "," << r.p_sampled << "\n";
  }
  return out.str();
}

}  // namespace qwalknet
