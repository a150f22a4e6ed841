// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace qwalknet {

/// Undirected simple graph on nodes {0, ..., n_nodes-1}.
///
/// Invariants (enforced by from_edges and the generators):
///   - no self loops, no duplicate edges,
///   - adjacency lists sorted and symmetric,
///   - every node has degree >= 1 (the walk needs a nonempty coin space).
struct Graph {
  int n_nodes = 0;
  std::vector<std::vector<int>> adjacency;

  /// Builds and validates a graph from an edge list. Throws on violations.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>> &edges);

  int degree(int node) const { return static_cast<int>(adjacency.at(node).size()); }
  bool has_edge(int a, int b) const;
  std::size_t edge_count() const;

  /// Edges as (i, j) with i < j, sorted lexicographically.
  std::vector<std::pair<int, int>> edge_list() const;

  /// FNV-1a hash over (n_nodes, sorted edge list); stable across runs.
  std::uint64_t hash() const;

  bool operator==(const Graph &other) const = default;
};

enum class GraphModel { ER, WS, BA };

std::string to_string(GraphModel model);
GraphModel graph_model_from_string(const std::string &name);

/// Generation parameters; only the fields required by `model` are read.
struct GraphParams {
  GraphModel model = GraphModel::ER;
  int n = 0;
  double p = -1.0;    // ER inclusion probability
  int k = -1;         // WS ring degree (even)
  double beta = -1.0; // WS rewiring probability
  int m = -1;         // BA attachment count
  std::uint64_t seed = 0;
};

/// Erdos-Renyi G(n, p): every pair included independently with probability p.
/// Retries with incremented sub-seeds if some node ends up isolated; throws
/// GenerationError when retries are exhausted.
Graph generate_er(int n, double p, std::uint64_t seed);

/// Watts-Strogatz G(n, k, beta): ring lattice with k neighbors per node, then
/// each edge rewired (far endpoint moved) with probability beta. Edge count is
/// always n*k/2.
Graph generate_ws(int n, int k, double beta, std::uint64_t seed);

/// Barabasi-Albert G(n, m): star seed on m+1 nodes, then preferential
/// attachment of m distinct targets per arriving node.
Graph generate_ba(int n, int m, std::uint64_t seed);

Graph generate(const GraphParams &params);

/// Edge-list text format: "N <n>" header then "<i> <j>" lines with i < j.
/// Files ending in .json use {"n": N, "edges": [[i,j],...]} instead.
Graph load_graph(const std::filesystem::path &path);
void save_graph(const Graph &g, const std::filesystem::path &path);

std::string graph_to_edge_text(const Graph &g);
std::string graph_to_json_text(const Graph &g);
Graph graph_from_edge_text(const std::string &text);
Graph graph_from_json_text(const std::string &text);

}  // namespace qwalknet
