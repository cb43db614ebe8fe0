#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mwkit/graph.hpp"
#include "mwkit/json_util.hpp"
#include "mwkit/util.hpp"

namespace mwkit {

struct MedianReport {
  bool median = false;
  std::string reason;                          // set when not median
  std::optional<std::array<int, 3>> witness;   // a triple without a unique median
};

namespace detail {

// Definitional recognizer: every triple of vertices must have exactly one
// vertex on shortest paths between all three pairs.
inline MedianReport check_median_definitional(const Graph& g) {
  MedianReport r;
  const int n = g.vertex_count();
  if (n == 0) {
    r.reason = "empty graph";
    return r;
  }
  if (!g.connected()) {
    r.reason = "disconnected";
    return r;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int duv = g.dist(u, v);
      for (int w = v + 1; w < n; ++w) {
        int dvw = g.dist(v, w), dwu = g.dist(w, u);
        int count = 0;
        for (int x = 0; x < n && count < 2; ++x) {
          if (g.dist(u, x) + g.dist(x, v) != duv) continue;
          if (g.dist(v, x) + g.dist(x, w) != dvw) continue;
          if (g.dist(w, x) + g.dist(x, u) != dwu) continue;
          ++count;
        }
        if (count != 1) {
          r.reason = count == 0 ? "triple without a median" : "triple with multiple medians";
          r.witness = std::array<int, 3>{u, v, w};
          return r;
        }
      }
    }
  }
  r.median = true;
  return r;
}

// Distance split of the vertex set by an edge (a,b): side_a holds the
// vertices strictly closer to a. A tie means an odd closed walk exists.
struct EdgeSplit {
  std::vector<int> side_a, side_b;
  bool tie = false;
};

inline EdgeSplit split_by_edge(const Graph& g, int a, int b) {
  EdgeSplit s;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int da = g.dist(v, a), db = g.dist(v, b);
    if (da == db) {
      s.tie = true;
      return s;
    }
    (da < db ? s.side_a : s.side_b).push_back(v);
  }
  return s;
}

// Recognizer for larger graphs. It builds explicit cut classes from edge
// splits, derives 0/1 signatures, and then verifies from scratch that the
// signature map is an isometric hypercube embedding (graph distance equals
// signature Hamming distance for every pair). Once that holds, a triple has
// a median exactly when the coordinatewise majority of its signatures is
// realized by a vertex, so the closure scan below is an exact uniqueness
// check, not a heuristic.
inline MedianReport check_median_structural(const Graph& g) {
  MedianReport r;
  const int n = g.vertex_count();
  if (n == 0) {
    r.reason = "empty graph";
    return r;
  }
  if (!g.connected()) {
    r.reason = "disconnected";
    return r;
  }

  const auto& edges = g.edges();
  std::vector<int> edge_class(edges.size(), -1);
  std::map<std::pair<int, int>, int> edge_id;
  for (std::size_t i = 0; i < edges.size(); ++i) edge_id[edges[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> class_side_a;
  int k = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edge_class[e] >= 0) continue;
    auto [a, b] = edges[e];
    EdgeSplit sp = split_by_edge(g, a, b);
    if (sp.tie) {
      r.reason = "odd cycle (edge split has a distance tie)";
      return r;
    }
    Bitset in_a = Bitset::from_vector(n, sp.side_a);
    std::vector<int> incident(n, 0);
    std::vector<std::pair<int, int>> members;
    for (const auto& ed : edges) {
      bool xa = in_a.test(ed.first), ya = in_a.test(ed.second);
      if (xa != ya) members.push_back(ed);
    }
    for (const auto& ed : members) {
      if (++incident[ed.first] > 1 || ++incident[ed.second] > 1) {
        r.reason = "cut class is not a matching";
        return r;
      }
    }
    for (const auto& ed : members) {
      int x = in_a.test(ed.first) ? ed.first : ed.second;
      int y = in_a.test(ed.first) ? ed.second : ed.first;
      for (int v = 0; v < n; ++v) {
        int dx = g.dist(v, x), dy = g.dist(v, y);
        if (dx == dy || (dx < dy) != in_a.test(v)) {
          r.reason = "cut classes are inconsistent";
          return r;
        }
      }
      edge_class[edge_id.at(ed)] = k;
    }
    class_side_a.push_back(std::move(sp.side_a));
    ++k;
  }

  if (k > 64) {
    // signatures no longer fit one word; fall back to the direct check
    return check_median_definitional(g);
  }

  std::vector<std::uint64_t> sig(n, 0);
  for (int c = 0; c < k; ++c) {
    Bitset in_a = Bitset::from_vector(n, class_side_a[c]);
    for (int v = 0; v < n; ++v)
      if (!in_a.test(v)) sig[v] |= std::uint64_t{1} << c;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (std::popcount(sig[u] ^ sig[v]) != g.dist(u, v)) {
        r.reason = "not isometrically hypercube-embeddable";
        return r;
      }

  // presence table over signatures
  std::vector<char> present;
  std::unordered_set<std::uint64_t> present_set;
  const bool small_space = k <= 22;
  if (small_space)
    present.assign(std::size_t{1} << k, 0);
  for (int v = 0; v < n; ++v) {
    if (small_space)
      present[sig[v]] = 1;
    else
      present_set.insert(sig[v]);
  }
  auto realized = [&](std::uint64_t s) {
    return small_space ? present[s] != 0 : present_set.count(s) != 0;
  };

  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int w = v + 1; w < n; ++w) {
        std::uint64_t maj = (sig[u] & sig[v]) | (sig[v] & sig[w]) | (sig[w] & sig[u]);
        if (!realized(maj)) {
          r.reason = "triple without a median";
          r.witness = std::array<int, 3>{u, v, w};
          return r;
        }
      }
  r.median = true;
  return r;
}

constexpr int kDefinitionalMedianLimit = 96;

}  // namespace detail

// Median recognition: connected and every vertex triple has a unique
// median. Switches to the signature-based recognizer on larger graphs.
inline MedianReport check_median(const Graph& g) {
  if (g.vertex_count() <= detail::kDefinitionalMedianLimit)
    return detail::check_median_definitional(g);
  return detail::check_median_structural(g);
}

inline bool is_median(const Graph& g) { return check_median(g).median; }

// ---------------------------------------------------------------------------
// Theta classes

// One equivalence class of edges under the Djokovic-Winkler relation,
// realized as the cut between the two distance halfspaces of its
// representative edge. side_a holds the vertices closer to rep.first.
struct ThetaClass {
  std::pair<int, int> rep;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> side_a, side_b;
};

// Partition of E(M) into Theta classes, ordered by canonical representative
// edge. Requires a median graph; pass verify=false only when medianness was
// already established by the caller.
inline std::vector<ThetaClass> theta_classes(const Graph& m, bool verify = true) {
  if (verify) {
    MedianReport r = check_median(m);
    if (!r.median)
      throw PreconditionError("theta_classes requires a median graph (" + r.reason + ")");
  }
  const auto& edges = m.edges();
  const int n = m.vertex_count();
  std::map<std::pair<int, int>, int> edge_id;
  for (std::size_t i = 0; i < edges.size(); ++i) edge_id[edges[i]] = static_cast<int>(i);
  std::vector<int> assigned(edges.size(), 0);
  std::vector<ThetaClass> classes;

  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (assigned[e]) continue;
    auto [a, b] = edges[e];
    detail::EdgeSplit sp = detail::split_by_edge(m, a, b);
    if (sp.tie) throw InternalError("theta split hit a distance tie on a median graph");
    detail::Bitset in_a = detail::Bitset::from_vector(n, sp.side_a);
    ThetaClass cls;
    cls.rep = edges[e];
    cls.side_a = std::move(sp.side_a);
    cls.side_b = std::move(sp.side_b);
    std::vector<int> incident(n, 0);
    for (const auto& ed : edges) {
      if (in_a.test(ed.first) != in_a.test(ed.second)) {
        cls.edges.push_back(ed);
        if (++incident[ed.first] > 1 || ++incident[ed.second] > 1)
          throw InternalError("theta class is not a matching");
      }
    }
    for (const auto& ed : cls.edges) assigned[edge_id.at(ed)] = 1;
    classes.push_back(std::move(cls));
  }
  return classes;
}

// Boundary of one side of a class: the side's endpoints of the cut edges.
inline std::vector<int> class_boundary(const ThetaClass& c, bool a_side) {
  std::vector<int> out;
  int max_v = 0;
  for (const auto& e : c.edges) max_v = std::max({max_v, e.first, e.second});
  const std::vector<int>& side = a_side ? c.side_a : c.side_b;
  std::vector<char> member(max_v + 1, 0);
  for (int v : side)
    if (v <= max_v) member[v] = 1;
  for (const auto& e : c.edges) out.push_back(member[e.first] ? e.first : e.second);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct PeripheralSide {
  int class_index = -1;
  bool a_side = true;
  std::vector<int> vertices;
};

// Sides whose boundary equals the whole halfspace.
inline std::vector<PeripheralSide> peripheral_sets(const Graph& m,
                                                   const std::vector<ThetaClass>& classes) {
  (void)m;
  std::vector<PeripheralSide> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (bool a_side : {true, false}) {
      const auto& side = a_side ? classes[i].side_a : classes[i].side_b;
      if (class_boundary(classes[i], a_side) == side)
        out.push_back({static_cast<int>(i), a_side, side});
    }
  }
  return out;
}

inline std::vector<PeripheralSide> peripheral_sets(const Graph& m) {
  return peripheral_sets(m, theta_classes(m));
}

// Two classes cross when all four halfspace intersections are inhabited;
// otherwise one pair of halfspaces nests (laminar).
inline bool classes_cross(const Graph& m, const ThetaClass& c1, const ThetaClass& c2) {
  const int n = m.vertex_count();
  detail::Bitset a1 = detail::Bitset::from_vector(n, c1.side_a);
  detail::Bitset b1 = detail::Bitset::from_vector(n, c1.side_b);
  detail::Bitset a2 = detail::Bitset::from_vector(n, c2.side_a);
  detail::Bitset b2 = detail::Bitset::from_vector(n, c2.side_b);
  return a1.intersects(a2) && a1.intersects(b2) && b1.intersects(a2) && b1.intersects(b2);
}

// One node per Theta class ("c0", "c1", ...), an edge for every crossing pair.
inline Graph crossing_graph(const Graph& m, const std::vector<ThetaClass>& classes) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < classes.size(); ++i) names.push_back("c" + std::to_string(i));
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      if (classes_cross(m, classes[i], classes[j]))
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Graph(std::move(names), edges);
}

inline Graph crossing_graph(const Graph& m) { return crossing_graph(m, theta_classes(m)); }

// Minimum number of tree factors needed for an isometric tree-product
// embedding: the chromatic number of the crossing graph. A single vertex
// still counts as one (trivial) factor.
inline int tree_dimension(const Graph& m, const std::vector<ThetaClass>& classes) {
  if (classes.empty()) return m.vertex_count() >= 1 ? 1 : 0;
  return chromatic_number(crossing_graph(m, classes)).colors;
}

inline int tree_dimension(const Graph& m) { return tree_dimension(m, theta_classes(m)); }

// ---------------------------------------------------------------------------
// tree-product embedding

struct TreeProductEmbedding {
  std::vector<Graph> factors;                // quotient trees
  std::vector<std::vector<int>> coords;      // [host vertex][factor] -> factor node
  std::vector<std::vector<int>> directions;  // [factor] -> class indices, pairwise laminar
};

// Exact coloring of the crossing graph yields the directions; each factor is
// the quotient of the host contracting every edge outside the direction.
// The construction is re-verified on the way out: factors must be trees,
// every class must project to exactly one factor edge, and distances must
// add up across factors.
inline TreeProductEmbedding embed_tree_product(const Graph& m, bool verify = true) {
  if (verify) {
    MedianReport r = check_median(m);
    if (!r.median)
      throw PreconditionError("embed_tree_product requires a median graph (" + r.reason + ")");
  }
  const int n = m.vertex_count();
  std::vector<ThetaClass> classes = theta_classes(m, false);
  TreeProductEmbedding emb;

  int k;
  std::vector<int> color(classes.size(), 1);
  if (classes.empty()) {
    k = 1;
  } else {
    ChromaticResult cr = chromatic_number(crossing_graph(m, classes));
    k = std::max(1, cr.colors);
    color = cr.coloring.color_of;
  }
  emb.directions.assign(k, {});
  for (std::size_t i = 0; i < classes.size(); ++i)
    emb.directions[color[i] - 1].push_back(static_cast<int>(i));

  emb.coords.assign(n, std::vector<int>(k, -1));
  for (int j = 0; j < k; ++j) {
    std::vector<char> in_direction(classes.size(), 0);
    for (int c : emb.directions[j]) in_direction[c] = 1;
    // contract every edge not in the direction
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    std::vector<int> cls_of_edge(m.edges().size(), -1);
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (const auto& e : classes[c].edges) {
        auto it = std::lower_bound(m.edges().begin(), m.edges().end(), e);
        cls_of_edge[it - m.edges().begin()] = static_cast<int>(c);
      }
    for (std::size_t e = 0; e < m.edges().size(); ++e) {
      if (cls_of_edge[e] >= 0 && in_direction[cls_of_edge[e]]) continue;
      auto [a, b] = m.edges()[e];
      int ra = find(a), rb = find(b);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    // components in order of smallest member
    std::vector<int> comp_id(n, -1);
    std::vector<std::string> node_names;
    for (int v = 0; v < n; ++v) {
      int root = find(v);
      if (comp_id[root] < 0) {
        comp_id[root] = static_cast<int>(node_names.size());
        node_names.push_back(m.name(root));
      }
      comp_id[v] = comp_id[root];
      emb.coords[v][j] = comp_id[v];
    }
    // one factor edge per class of the direction
    std::set<std::pair<int, int>> factor_edges;
    for (int c : emb.directions[j]) {
      std::optional<std::pair<int, int>> pair;
      for (const auto& e : classes[c].edges) {
        int x = comp_id[e.first], y = comp_id[e.second];
        if (x > y) std::swap(x, y);
        if (x == y) throw InternalError("tree quotient contracted a direction class");
        if (!pair)
          pair = std::make_pair(x, y);
        else if (*pair != std::make_pair(x, y))
          throw InternalError("direction class spans multiple quotient edges");
      }
      if (!pair) throw InternalError("empty theta class");
      if (!factor_edges.insert(*pair).second)
        throw InternalError("two direction classes collapsed onto one quotient edge");
    }
    Graph factor(std::move(node_names),
                 std::vector<std::pair<int, int>>(factor_edges.begin(), factor_edges.end()));
    if (!factor.connected() ||
        factor.edge_count() != factor.vertex_count() - 1)
      throw InternalError("direction quotient is not a tree");
    emb.factors.push_back(std::move(factor));
  }

  // isometry across factors
  if (n <= 2048) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        int total = 0;
        for (int j = 0; j < k; ++j)
          total += emb.factors[j].dist(emb.coords[u][j], emb.coords[v][j]);
        if (total != m.dist(u, v))
          throw InternalError("tree-product embedding is not isometric");
      }
  }
  return emb;
}

// ---------------------------------------------------------------------------
// constructions on median graphs

// Cartesian product; pair vertices are named "u|v".
inline Graph cartesian_product(const Graph& g1, const Graph& g2) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(g1.vertex_count()) * g2.vertex_count());
  for (const auto& a : g1.names())
    for (const auto& b : g2.names()) names.push_back(a + "|" + b);
  auto id = [&](int a, int b) { return a * g2.vertex_count() + b; };
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g1.edges())
    for (int x = 0; x < g2.vertex_count(); ++x) edges.emplace_back(id(a, x), id(b, x));
  for (int a = 0; a < g1.vertex_count(); ++a)
    for (auto [x, y] : g2.edges()) edges.emplace_back(id(a, x), id(a, y));
  return Graph(std::move(names), edges);
}

// Disjoint copy of the subgraph on a convex set, matched back onto it.
// Exactly one new Theta class appears; the copy is a peripheral set of the
// result.
inline Graph peripheral_expansion(const Graph& m, const std::vector<int>& convex_set,
                                  bool verify = true) {
  if (convex_set.empty())
    throw PreconditionError("peripheral_expansion requires a nonempty set");
  if (verify) {
    MedianReport r = check_median(m);
    if (!r.median)
      throw PreconditionError("peripheral_expansion requires a median graph (" + r.reason + ")");
    if (!is_convex(m, convex_set))
      throw PreconditionError("peripheral_expansion requires a convex set");
  }
  std::unordered_set<std::string> taken(m.names().begin(), m.names().end());
  std::vector<std::string> names = m.names();
  std::vector<int> copy_of(m.vertex_count(), -1);
  for (int v : convex_set) {
    std::string fresh = m.name(v) + "'";
    while (taken.count(fresh)) fresh += "'";
    taken.insert(fresh);
    copy_of[v] = static_cast<int>(names.size());
    names.push_back(fresh);
  }
  std::vector<std::pair<int, int>> edges = m.edges();
  for (auto [a, b] : m.edges())
    if (copy_of[a] >= 0 && copy_of[b] >= 0) edges.emplace_back(copy_of[a], copy_of[b]);
  for (int v : convex_set) edges.emplace_back(v, copy_of[v]);
  return Graph(std::move(names), edges);
}

// Grows a median graph from a single vertex by seeded random peripheral
// expansions of convex hulls of small vertex samples.
inline Graph random_median_graph(int steps, unsigned seed) {
  if (steps < 0) throw PreconditionError("steps must be >= 0");
  detail::Rng rng(seed);
  Graph m({"0"}, {});
  for (int s = 0; s < steps; ++s) {
    const int n = m.vertex_count();
    static constexpr int kSizes[6] = {1, 1, 1, 2, 2, 3};
    int want = kSizes[rng.below(6)];
    int first = rng.below(n);
    std::vector<int> nearby;
    for (int v = 0; v < n; ++v)
      if (m.dist(first, v) <= 2) nearby.push_back(v);
    std::vector<int> sample{first};
    for (int i = 1; i < want; ++i) sample.push_back(nearby[rng.below(static_cast<int>(nearby.size()))]);
    std::sort(sample.begin(), sample.end());
    sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
    m = peripheral_expansion(m, convex_hull(m, sample), /*verify=*/false);
  }
  return m;
}

namespace detail {

// Every complete subgraph of g (the empty one included), in canonical
// order: generated by extending cliques with larger-index vertices.
inline std::vector<std::vector<int>> enumerate_cliques(const Graph& g, int budget) {
  const int n = g.vertex_count();
  std::vector<Bitset> adj(n, Bitset(n));
  for (auto [a, b] : g.edges()) {
    adj[a].set(b);
    adj[b].set(a);
  }
  std::vector<std::vector<int>> cliques{{}};
  for (std::size_t head = 0; head < cliques.size(); ++head) {
    std::vector<int> k = cliques[head];
    int start = k.empty() ? 0 : k.back() + 1;
    for (int v = start; v < n; ++v) {
      bool ok = true;
      for (int u : k)
        if (!adj[u].test(v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      std::vector<int> next = k;
      next.push_back(v);
      if (static_cast<int>(cliques.size()) >= budget)
        throw BoundError("clique count exceeds budget " + std::to_string(budget));
      cliques.push_back(std::move(next));
    }
  }
  return cliques;
}

inline std::string clique_node_name(const Graph& g, const std::vector<int>& clique) {
  std::string s = "{";
  for (std::size_t i = 0; i < clique.size(); ++i) {
    if (i) s += ",";
    s += g.name(clique[i]);
  }
  s += "}";
  return s;
}

}  // namespace detail

// Graph of all complete subgraphs (the empty one included), adjacent when
// they differ by one vertex. Nodes are named "{a,b,...}" from the member
// names in canonical order.
inline Graph simplex_graph(const Graph& g, int budget = 4096) {
  std::vector<std::vector<int>> cliques = detail::enumerate_cliques(g, budget);
  std::map<std::vector<int>, int> id;
  for (std::size_t i = 0; i < cliques.size(); ++i) id[cliques[i]] = static_cast<int>(i);
  std::vector<std::string> names;
  names.reserve(cliques.size());
  for (const auto& k : cliques) names.push_back(detail::clique_node_name(g, k));
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    const auto& k = cliques[i];
    for (std::size_t drop = 0; drop < k.size(); ++drop) {
      std::vector<int> smaller;
      for (std::size_t j = 0; j < k.size(); ++j)
        if (j != drop) smaller.push_back(k[j]);
      edges.emplace_back(id.at(smaller), static_cast<int>(i));
    }
  }
  return Graph(std::move(names), edges);
}

// ---------------------------------------------------------------------------
// gates

// The unique member of K on shortest paths from v to every member, if any.
inline std::optional<int> gate(const Graph& h, const std::vector<int>& k_set, int v) {
  if (k_set.empty()) throw PreconditionError("gate requires a nonempty set");
  if (!h.connected()) throw PreconditionError("gate requires a connected graph");
  int best = -1, best_d = -1;
  bool tie = false;
  for (int x : k_set) {
    int d = h.dist(v, x);
    if (best < 0 || d < best_d) {
      best = x;
      best_d = d;
      tie = false;
    } else if (d == best_d) {
      tie = true;
    }
  }
  if (tie) return std::nullopt;
  for (int w : k_set)
    if (h.dist(v, best) + h.dist(best, w) != h.dist(v, w)) return std::nullopt;
  return best;
}

inline bool is_gated(const Graph& h, const std::vector<int>& k_set) {
  for (int v = 0; v < h.vertex_count(); ++v)
    if (!gate(h, k_set, v)) return false;
  return true;
}

// Convexity shortcut valid on verified median graphs, where the convex sets
// are exactly the gated sets. Used by validators on large hosts; agrees
// with is_convex (property-tested).
inline bool is_convex_in_median(const Graph& m, const std::vector<int>& set) {
  if (set.empty()) return true;
  return is_gated(m, set);
}

// ---------------------------------------------------------------------------
// embedding document ("mwkit-embedding-v1")

inline std::string serialize_embedding(const Graph& m, const TreeProductEmbedding& e) {
  detail::ordered_json j;
  j["format"] = "mwkit-embedding-v1";
  auto factors = detail::ordered_json::array();
  for (const auto& f : e.factors) factors.push_back(detail::graph_to_json(f));
  j["factors"] = factors;
  detail::ordered_json coords = detail::ordered_json::object();
  for (int v = 0; v < m.vertex_count(); ++v) {
    auto arr = detail::ordered_json::array();
    for (std::size_t f = 0; f < e.factors.size(); ++f)
      arr.push_back(e.factors[f].name(e.coords[v][f]));
    coords[m.name(v)] = arr;
  }
  j["coords"] = coords;
  return detail::dump_document(j);
}

struct EmbeddingDocument {
  std::vector<Graph> factors;
  std::vector<std::string> vertices;                  // host vertex names, in order
  std::vector<std::vector<std::string>> coords;       // per vertex, factor node names
};

inline EmbeddingDocument parse_embedding(const std::string& text) {
  auto j = detail::parse_json_document(text, "mwkit-embedding-v1");
  EmbeddingDocument doc;
  if (!j.contains("factors") || !j.at("factors").is_array())
    throw ParseError("embedding document needs a factors array");
  for (const auto& f : j.at("factors"))
    doc.factors.push_back(detail::graph_from_json(f, "factor"));
  if (!j.contains("coords") || !j.at("coords").is_object())
    throw ParseError("embedding document needs a coords object");
  for (const auto& [name, arr] : j.at("coords").items()) {
    if (!arr.is_array() || arr.size() != doc.factors.size())
      throw ParseError("coords for '" + name + "' must list one node per factor");
    doc.vertices.push_back(name);
    std::vector<std::string> tuple;
    for (std::size_t f = 0; f < arr.size(); ++f) {
      std::string node = arr[f].get<std::string>();
      if (doc.factors[f].index_of(node) < 0)
        throw ParseError("coords for '" + name + "' name an unknown factor node '" + node + "'");
      tuple.push_back(node);
    }
    doc.coords.push_back(std::move(tuple));
  }
  return doc;
}

inline std::string serialize_embedding(const EmbeddingDocument& doc) {
  detail::ordered_json j;
  j["format"] = "mwkit-embedding-v1";
  auto factors = detail::ordered_json::array();
  for (const auto& f : doc.factors) factors.push_back(detail::graph_to_json(f));
  j["factors"] = factors;
  detail::ordered_json coords = detail::ordered_json::object();
  for (std::size_t v = 0; v < doc.vertices.size(); ++v) {
    auto arr = detail::ordered_json::array();
    for (const auto& node : doc.coords[v]) arr.push_back(node);
    coords[doc.vertices[v]] = arr;
  }
  j["coords"] = coords;
  return detail::dump_document(j);
}

}  // namespace mwkit
