#pragma once

#include <string>
#include <vector>

#include "mwkit/graph.hpp"
#include "mwkit/median.hpp"
#include "mwkit/util.hpp"

namespace mwkit {

// Deterministic graph families. Vertex naming:
//   path/cycle/random_tree: "0".."n-1"
//   grid m x n:             "i|j" (path product)
//   hypercube k:            coordinate tuples "0|1|..." (K2 product), "0"/"1" for k=1
//   complete_multipartite:  "<part>_<index>", e.g. "0_0", "0_1", "1_0"
//   petersen:               outer "o0".."o4", inner "i0".."i4"

inline Graph make_path(int n) {
  if (n < 1) throw PreconditionError("path needs n >= 1");
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(std::move(names), edges);
}

inline Graph make_cycle(int n) {
  if (n < 3) throw PreconditionError("cycle needs n >= 3");
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(std::move(names), edges);
}

inline Graph make_grid(int m, int n) {
  if (m < 1 || n < 1) throw PreconditionError("grid needs m,n >= 1");
  return cartesian_product(make_path(m), make_path(n));
}

inline Graph make_hypercube(int k) {
  if (k < 0) throw PreconditionError("hypercube needs k >= 0");
  if (k == 0) return Graph({"0"}, {});
  Graph k2({"0", "1"}, {{0, 1}});
  Graph q = k2;
  for (int i = 1; i < k; ++i) q = cartesian_product(q, k2);
  return q;
}

inline Graph make_complete_multipartite(const std::vector<int>& parts) {
  if (parts.empty()) throw PreconditionError("complete_multipartite needs at least one part");
  for (int p : parts)
    if (p < 1) throw PreconditionError("complete_multipartite parts must be >= 1");
  std::vector<std::string> names;
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int i = 0; i < parts[p]; ++i) {
      names.push_back(std::to_string(p) + "_" + std::to_string(i));
      part_of.push_back(static_cast<int>(p));
    }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < names.size(); ++a)
    for (std::size_t b = a + 1; b < names.size(); ++b)
      if (part_of[a] != part_of[b]) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return Graph(std::move(names), edges);
}

inline Graph make_complete(int n) { return make_complete_multipartite(std::vector<int>(n, 1)); }

// Random labelled tree from a seeded Pruefer sequence.
inline Graph make_random_tree(int n, unsigned seed) {
  if (n < 1) throw PreconditionError("random_tree needs n >= 1");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<std::pair<int, int>> edges;
  if (n >= 2) {
    detail::Rng rng(seed);
    std::vector<int> pruefer(std::max(0, n - 2));
    for (int& x : pruefer) x = rng.below(n);
    std::vector<int> degree(n, 1);
    for (int x : pruefer) ++degree[x];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) leaves.insert(v);
    for (int x : pruefer) {
      int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      edges.emplace_back(leaf, x);
      if (--degree[x] == 1) leaves.insert(x);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
  }
  return Graph(std::move(names), edges);
}

inline Graph make_petersen() {
  std::vector<std::string> names;
  for (int i = 0; i < 5; ++i) names.push_back("o" + std::to_string(i));
  for (int i = 0; i < 5; ++i) names.push_back("i" + std::to_string(i));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);        // outer cycle
  for (int i = 0; i < 5; ++i) edges.emplace_back(i, 5 + i);              // spokes
  for (int i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // pentagram
  return Graph(std::move(names), edges);
}

// Dispatcher used by the CLI.
inline Graph generate(const std::string& family, const std::vector<int>& params,
                      unsigned seed) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw PreconditionError("family '" + family + "' takes " + std::to_string(k) +
                              " parameter(s)");
  };
  if (family == "path") {
    need(1);
    return make_path(params[0]);
  }
  if (family == "cycle") {
    need(1);
    return make_cycle(params[0]);
  }
  if (family == "grid") {
    need(2);
    return make_grid(params[0], params[1]);
  }
  if (family == "hypercube") {
    need(1);
    return make_hypercube(params[0]);
  }
  if (family == "complete_multipartite") {
    if (params.empty())
      throw PreconditionError("complete_multipartite needs part sizes");
    return make_complete_multipartite(params);
  }
  if (family == "random_tree") {
    need(1);
    return make_random_tree(params[0], seed);
  }
  if (family == "petersen") {
    need(0);
    return make_petersen();
  }
  if (family == "random_median") {
    need(1);
    return random_median_graph(params[0], seed);
  }
  throw PreconditionError("unknown family '" + family + "'");
}

}  // namespace mwkit
