#pragma once

// Shared test machinery: independent oracles (kept deliberately separate
// from the library's implementation paths), deterministic random graph
// sources, and the isomorphism-reduced census of small connected graphs.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "mwkit/mwkit.hpp"

namespace testsup {

using mwkit::Graph;

// Breadth-first distances recomputed from adjacency only; the oracle for
// the library's eagerly built distance table.
inline std::vector<std::vector<int>> naive_bfs_dist(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    d[s][s] = 0;
    std::vector<int> queue{s};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int v = queue[h];
      for (int w : g.neighbors(v))
        if (d[s][w] < 0) {
          d[s][w] = d[s][v] + 1;
          queue.push_back(w);
        }
    }
  }
  return d;
}

// Edge partition by the Djokovic-Winkler relation, computed directly from
// its distance definition plus transitive closure. Independent of the
// library's halfspace-split route.
inline std::vector<std::vector<std::pair<int, int>>> dw_relation_classes(const Graph& g) {
  auto d = naive_bfs_dist(g);
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto [x, y] = edges[i];
      auto [u, v] = edges[j];
      if (d[x][u] + d[y][v] != d[x][v] + d[y][u]) {
        int a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  std::map<int, std::vector<std::pair<int, int>>> groups;
  for (int i = 0; i < m; ++i) groups[find(i)].push_back(edges[i]);
  std::vector<std::vector<std::pair<int, int>>> out;
  for (auto& [root, es] : groups) out.push_back(std::move(es));
  return out;
}

// Exhaustive triangle search; oracle for triangle-freeness claims.
inline bool has_triangle(const Graph& g) {
  for (auto [a, b] : g.edges())
    for (int c = 0; c < g.vertex_count(); ++c)
      if (c != a && c != b && g.has_edge(a, c) && g.has_edge(b, c)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// deterministic random graphs

inline Graph random_gnp(int n, int percent, unsigned seed) {
  mwkit::detail::Rng rng(seed);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng.below(100) < percent) edges.emplace_back(a, b);
  return Graph(std::move(names), edges);
}

inline Graph random_connected_graph(int n, unsigned seed) {
  for (unsigned attempt = 0;; ++attempt) {
    Graph g = random_gnp(n, 45, seed + 1000 * attempt);
    if (g.connected()) return g;
  }
}

// Random nonempty convex set: hull of a small vertex sample.
inline std::vector<int> random_convex_set(const Graph& median_graph, mwkit::detail::Rng& rng) {
  int n = median_graph.vertex_count();
  std::vector<int> sample{rng.below(n)};
  int extra = rng.below(3);
  for (int i = 0; i < extra; ++i) sample.push_back(rng.below(n));
  std::sort(sample.begin(), sample.end());
  sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
  return mwkit::convex_hull(median_graph, sample);
}

// Random valid decomposition over the given median host: pick a convex
// support per subject vertex, then let the subject's edges be a random
// subset of the support-intersection pairs. Valid by construction.
inline mwkit::Decomposition random_decomposition(const Graph& host, int subject_size,
                                                 unsigned seed) {
  mwkit::detail::Rng rng(seed);
  std::vector<std::vector<int>> supports;
  for (int v = 0; v < subject_size; ++v) supports.push_back(random_convex_set(host, rng));
  std::vector<std::string> names;
  for (int v = 0; v < subject_size; ++v) names.push_back("g" + std::to_string(v));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < subject_size; ++u)
    for (int v = u + 1; v < subject_size; ++v) {
      bool meet = !mwkit::detail::sorted_intersection(supports[u], supports[v]).empty();
      if (meet && rng.below(100) < 70) edges.emplace_back(u, v);
    }
  Graph subject(std::move(names), edges);
  std::vector<std::vector<int>> bags(host.vertex_count());
  for (int v = 0; v < subject_size; ++v)
    for (int h : supports[v]) bags[h].push_back(v);
  return mwkit::Decomposition(host, subject, std::move(bags));
}

// ---------------------------------------------------------------------------
// census of connected graphs up to isomorphism (n <= 7)

// Graphs are edge masks over vertex pairs (i<j), pair index j*(j-1)/2 + i.
inline int pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

namespace censusdetail {

inline std::uint32_t permute_mask(std::uint32_t mask, int n, const std::vector<int>& perm) {
  std::uint32_t out = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (mask >> pair_index(i, j) & 1) out |= std::uint32_t{1} << pair_index(perm[i], perm[j]);
  return out;
}

inline std::uint32_t canonical_mask(std::uint32_t mask, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = mask;
  while (std::next_permutation(perm.begin(), perm.end()))
    best = std::min(best, permute_mask(mask, n, perm));
  return best;
}

inline bool mask_connected(std::uint32_t mask, int n) {
  if (n == 0) return true;
  std::uint32_t seen = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w)
      if (w != v && (mask >> pair_index(v, w) & 1) && !(seen >> w & 1)) {
        seen |= std::uint32_t{1} << w;
        stack.push_back(w);
      }
  }
  return seen == (std::uint32_t{1} << n) - 1;
}

}  // namespace censusdetail

// All graphs on exactly n vertices up to isomorphism (canonical masks),
// grown one vertex at a time.
inline const std::vector<std::uint32_t>& all_graph_census(int n) {
  static std::map<int, std::vector<std::uint32_t>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n == 1) return cache.emplace(1, std::vector<std::uint32_t>{0}).first->second;
  const auto& prev = all_graph_census(n - 1);
  std::unordered_set<std::uint32_t> seen;
  std::vector<std::uint32_t> out;
  for (std::uint32_t base : prev) {
    for (std::uint32_t nbhd = 0; nbhd < (std::uint32_t{1} << (n - 1)); ++nbhd) {
      std::uint32_t mask = base;
      for (int i = 0; i < n - 1; ++i)
        if (nbhd >> i & 1) mask |= std::uint32_t{1} << pair_index(i, n - 1);
      std::uint32_t canon = censusdetail::canonical_mask(mask, n);
      if (seen.insert(canon).second) out.push_back(canon);
    }
  }
  std::sort(out.begin(), out.end());
  return cache.emplace(n, std::move(out)).first->second;
}

// Connected graphs on exactly n vertices up to isomorphism.
inline const std::vector<std::uint32_t>& connected_census(int n) {
  static std::map<int, std::vector<std::uint32_t>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask : all_graph_census(n))
    if (censusdetail::mask_connected(mask, n)) out.push_back(mask);
  return cache.emplace(n, std::move(out)).first->second;
}

inline Graph census_graph(int n, std::uint32_t mask) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (mask >> pair_index(i, j) & 1) edges.emplace_back(i, j);
  return Graph(std::move(names), edges);
}

// ---------------------------------------------------------------------------
// shared fixture: the width-2 decomposition of the 4-cycle over itself

inline mwkit::Decomposition c4_square_decomposition() {
  Graph subject = mwkit::make_cycle(4);  // vertices "0".."3"
  Graph host({"12", "23", "34", "14"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  // host node "12" carries subject {0,1} (paper labels are 1-based)
  std::vector<std::vector<int>> bags = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  return mwkit::Decomposition(std::move(host), std::move(subject), std::move(bags));
}

}  // namespace testsup
