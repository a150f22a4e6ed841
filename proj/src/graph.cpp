// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "qwalknet/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qwalknet/errors.hpp"
#include "qwalknet/rng.hpp"

namespace qwalknet {

namespace {

void check_node_range(int node, int n, const std::string &context) {
  if (node < 0 || node >= n) {
    throw UsageError(context + ": node " + std::to_string(node) +
                     " outside [0, " + std::to_string(n) + ")");
  }
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>> &edges) {
  if (n < 1) throw UsageError("graph needs at least one node");
  Graph g;
  g.n_nodes = n;
  g.adjacency.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    check_node_range(a, n, "edge");
    check_node_range(b, n, "edge");
    if (a == b) {
      throw UsageError("self-loop on node " + std::to_string(a));
    }
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) {
      throw UsageError("duplicate edge " + std::to_string(key.first) + "-" +
                       std::to_string(key.second));
    }
    g.adjacency[a].push_back(b);
    g.adjacency[b].push_back(a);
  }
  for (int i = 0; i < n; ++i) {
    auto &nbrs = g.adjacency[i];
    std::sort(nbrs.begin(), nbrs.end());
    if (nbrs.empty()) {
      throw UsageError("node " + std::to_string(i) +
                       " is isolated; the walk needs degree >= 1 everywhere");
    }
  }
  return g;
}

bool Graph::has_edge(int a, int b) const {
  const auto &nbrs = adjacency.at(a);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto &nbrs : adjacency) twice += nbrs.size();
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edge_count());
  for (int i = 0; i < n_nodes; ++i) {
    for (int j : adjacency[i]) {
      if (i < j) edges.emplace_back(i, j);
    }
  }
  return edges;
}

std::uint64_t Graph::hash() const {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  auto mix = [&h](std::uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (v >> (8 * byte)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(n_nodes));
  for (auto [a, b] : edge_list()) {
    mix(static_cast<std::uint64_t>(a));
    mix(static_cast<std::uint64_t>(b));
  }
  return h;
}

std::string to_string(GraphModel model) {
  switch (model) {
    case GraphModel::ER: return "er";
    case GraphModel::WS: return "ws";
    case GraphModel::BA: return "ba";
  }
  return "?";
}

GraphModel graph_model_from_string(const std::string &name) {
  if (name == "er" || name == "ER") return GraphModel::ER;
  if (name == "ws" || name == "WS") return GraphModel::WS;
  if (name == "ba" || name == "BA") return GraphModel::BA;
  throw UsageError("unknown graph model '" + name + "' (expected er|ws|ba)");
}

Graph generate_er(int n, double p, std::uint64_t seed) {
  if (n < 2) throw UsageError("ER model needs n >= 2");
  if (p < 0.0 || p > 1.0) throw UsageError("ER probability must be in [0, 1]");

  constexpr int kMaxAttempts = 64;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Rng rng(seed + static_cast<std::uint64_t>(attempt));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng.bernoulli(p)) edges.emplace_back(i, j);
      }
    }
    std::vector<int> degree(n, 0);
    for (auto [a, b] : edges) {
      ++degree[a];
      ++degree[b];
    }
    if (std::all_of(degree.begin(), degree.end(), [](int d) { return d > 0; })) {
      return Graph::from_edges(n, edges);
    }
  }
  std::ostringstream msg;
  msg << "ER(n=" << n << ", p=" << p << ", seed=" << seed
      << "): no isolated-node-free instance after " << kMaxAttempts
      << " attempts (p too small)";
  throw GenerationError(msg.str());
}

Graph generate_ws(int n, int k, double beta, std::uint64_t seed) {
  if (n < 3) throw UsageError("WS model needs n >= 3");
  if (k < 2 || k % 2 != 0 || k >= n) {
    throw UsageError("WS ring degree k must be even with 2 <= k < n");
  }
  if (beta < 0.0 || beta > 1.0) {
    throw UsageError("WS rewiring probability must be in [0, 1]");
  }

  // Ring lattice, then one deterministic scan over (distance, node) rewiring
  // the far endpoint with probability beta, skipping when no legal endpoint
  // exists. Each node keeps its k/2 "near" spokes, so degrees stay >= 1.
  std::set<std::pair<int, int>> edges;
  for (int d = 1; d <= k / 2; ++d) {
    for (int i = 0; i < n; ++i) {
      int j = (i + d) % n;
      edges.insert(std::minmax(i, j));
    }
  }

  Rng rng(seed);
  auto adjacent = [&edges](int a, int b) {
    return edges.count(std::minmax(a, b)) > 0;
  };
  for (int d = 1; d <= k / 2; ++d) {
    for (int i = 0; i < n; ++i) {
      int j = (i + d) % n;
      if (!rng.bernoulli(beta)) continue;
      if (!adjacent(i, j)) continue;  // already moved by an earlier rewire
      int legal = 0;
      for (int u = 0; u < n; ++u) {
        if (u != i && !adjacent(i, u)) ++legal;
      }
      if (legal == 0) continue;
      int target;
      do {
        target = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      } while (target == i || adjacent(i, target));
      edges.erase(std::minmax(i, j));
      edges.insert(std::minmax(i, target));
    }
  }

  return Graph::from_edges(
      n, std::vector<std::pair<int, int>>(edges.begin(), edges.end()));
}

Graph generate_ba(int n, int m, std::uint64_t seed) {
  if (m < 1) throw UsageError("BA attachment count m must be >= 1");
  if (m >= n) throw UsageError("BA model needs m < n");

  // Star seed on m+1 nodes (hub 0), then preferential attachment: each
  // arriving node picks m distinct targets with probability proportional to
  // degree, re-drawing on duplicates.
  std::vector<std::pair<int, int>> edges;
  std::vector<int> chances;  // node repeated once per unit of degree
  for (int leaf = 1; leaf <= m; ++leaf) {
    edges.emplace_back(0, leaf);
    chances.push_back(0);
    chances.push_back(leaf);
  }

  Rng rng(seed);
  for (int v = m + 1; v < n; ++v) {
    std::set<int> targets;
    while (static_cast<int>(targets.size()) < m) {
      int candidate = chances[rng.below(chances.size())];
      targets.insert(candidate);
    }
    for (int t : targets) {
      edges.emplace_back(t, v);
      chances.push_back(t);
      chances.push_back(v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph generate(const GraphParams &params) {
  switch (params.model) {
    case GraphModel::ER:
      if (params.p < 0.0) throw UsageError("ER model requires p");
      return generate_er(params.n, params.p, params.seed);
    case GraphModel::WS:
      if (params.k < 0) throw UsageError("WS model requires k");
      if (params.beta < 0.0) throw UsageError("WS model requires beta");
      return generate_ws(params.n, params.k, params.beta, params.seed);
    case GraphModel::BA:
      if (params.m < 0) throw UsageError("BA model requires m");
      return generate_ba(params.n, params.m, params.seed);
  }
  throw UsageError("unknown graph model");
}

std::string graph_to_edge_text(const Graph &g) {
  std::ostringstream out;
  out << "N " << g.n_nodes << "\n";
  for (auto [a, b] : g.edge_list()) out << a << " " << b << "\n";
  return out.str();
}

std::string graph_to_json_text(const Graph &g) {
  nlohmann::json j;
  j["n"] = g.n_nodes;
  auto edges = nlohmann::json::array();
  for (auto [a, b] : g.edge_list()) edges.push_back({a, b});
  j["edges"] = edges;
  return j.dump() + "\n";
}

Graph graph_from_edge_text(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      std::string tag;
      if (!(fields >> tag >> n) || tag != "N" || n < 1) {
        throw IoError("line " + std::to_string(line_no) +
                      ": expected header 'N <n_nodes>'");
      }
      continue;
    }
    int a, b;
    if (!(fields >> a >> b)) {
      throw IoError("line " + std::to_string(line_no) +
                    ": expected '<i> <j>'");
    }
    std::string extra;
    if (fields >> extra) {
      throw IoError("line " + std::to_string(line_no) + ": trailing tokens");
    }
    if (a >= b) {
      throw IoError("line " + std::to_string(line_no) + ": edge " +
                    std::to_string(a) + " " + std::to_string(b) +
                    (a == b ? " is a self-loop" : " must satisfy i < j"));
    }
    edges.emplace_back(a, b);
  }
  if (n < 0) throw IoError("missing 'N <n_nodes>' header");
  try {
    return Graph::from_edges(n, edges);
  } catch (const UsageError &e) {
    throw IoError(std::string("invalid graph: ") + e.what());
  }
}

Graph graph_from_json_text(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw IoError(std::string("JSON parse error: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("edges")) {
    throw IoError("graph JSON needs fields 'n' and 'edges'");
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto &e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) {
      throw IoError("graph JSON edge entries must be [i, j] pairs");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  try {
    return Graph::from_edges(j["n"].get<int>(), edges);
  } catch (const UsageError &e) {
    throw IoError(std::string("invalid graph: ") + e.what());
  }
}

namespace {

bool is_json_path(const std::filesystem::path &path) {
  return path.extension() == ".json";
}

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path &path, const std::string &text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

Graph load_graph(const std::filesystem::path &path) {
  const std::string text = read_file(path);
  return is_json_path(path) ? graph_from_json_text(text)
                            : graph_from_edge_text(text);
}

void save_graph(const Graph &g, const std::filesystem::path &path) {
  write_file(path, is_json_path(path) ? graph_to_json_text(g)
                                      : graph_to_edge_text(g));
}

}  // namespace qwalknet
