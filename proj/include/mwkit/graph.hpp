#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mwkit/util.hpp"

namespace mwkit {

// Finite simple undirected graph with string-named vertices. Immutable
// after construction; the all-pairs hop-distance table is computed eagerly
// by breadth-first traversal from every vertex. Vertex order is the
// declaration order and is the canonical order used by every operation
// that returns sets or documents.
class Graph {
 public:
  static constexpr int kUnreachable = -1;

  Graph() = default;

  // names: declaration order; edges: index pairs into names.
  Graph(std::vector<std::string> names, const std::vector<std::pair<int, int>>& edges)
      : names_(std::move(names)) {
    const int n = static_cast<int>(names_.size());
    for (int i = 0; i < n; ++i) {
      const std::string& s = names_[i];
      if (s.empty()) throw Error("empty vertex name");
      for (char c : s)
        if (std::isspace(static_cast<unsigned char>(c)))
          throw Error("vertex name contains whitespace: '" + s + "'");
      if (!index_.emplace(s, i).second)
        throw Error("duplicate vertex name: '" + s + "'");
    }
    adj_.assign(n, {});
    for (auto [a, b] : edges) {
      if (a < 0 || b < 0 || a >= n || b >= n) throw Error("edge endpoint out of range");
      if (a == b) throw Error("self-loop at '" + names_[a] + "'");
      if (a > b) std::swap(a, b);
      edges_.emplace_back(a, b);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw Error("duplicate edge");
    for (auto [a, b] : edges_) {
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    compute_distances();
  }

  static Graph from_named_edges(
      const std::vector<std::string>& declared,
      const std::vector<std::pair<std::string, std::string>>& edges) {
    std::vector<std::string> names;
    std::unordered_map<std::string, int> idx;
    auto intern = [&](const std::string& s) {
      auto it = idx.find(s);
      if (it != idx.end()) return it->second;
      int i = static_cast<int>(names.size());
      names.push_back(s);
      idx.emplace(s, i);
      return i;
    };
    for (const auto& d : declared) intern(d);
    std::vector<std::pair<int, int>> es;
    for (const auto& [a, b] : edges) es.emplace_back(intern(a), intern(b));
    return Graph(std::move(names), es);
  }

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int v) const { return names_[v]; }

  // -1 when the name is unknown
  int index_of(const std::string& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
  }
  int require_index(const std::string& s) const {
    int i = index_of(s);
    if (i < 0) throw Error("unknown vertex: '" + s + "'");
    return i;
  }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int a, int b) const {
    if (a == b) return false;
    const auto& nb = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
    int other = adj_[a].size() <= adj_[b].size() ? b : a;
    return std::binary_search(nb.begin(), nb.end(), other);
  }

  // canonical order: (i, j) with i < j, sorted
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int dist(int a, int b) const {
    std::uint16_t d = dist_[a][b];
    return d == kInf ? kUnreachable : static_cast<int>(d);
  }

  bool connected() const { return connected_; }

  bool operator==(const Graph& o) const {
    return names_ == o.names_ && edges_ == o.edges_;
  }

 private:
  static constexpr std::uint16_t kInf = std::numeric_limits<std::uint16_t>::max();

  void compute_distances() {
    const int n = vertex_count();
    if (n >= static_cast<int>(kInf))
      throw BoundError("graph too large for distance table");
    dist_.assign(n, std::vector<std::uint16_t>(n, kInf));
    std::vector<int> queue;
    queue.reserve(n);
    for (int s = 0; s < n; ++s) {
      auto& row = dist_[s];
      row[s] = 0;
      queue.clear();
      queue.push_back(s);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        std::uint16_t dv = row[v];
        for (int w : adj_[v]) {
          if (row[w] == kInf) {
            row[w] = static_cast<std::uint16_t>(dv + 1);
            queue.push_back(w);
          }
        }
      }
    }
    connected_ = true;
    for (int v = 0; v < n && connected_; ++v)
      if (dist_[0][v] == kInf) connected_ = false;
    if (n == 0) connected_ = true;
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<std::uint16_t>> dist_;
  bool connected_ = true;
};

// A separation of a graph: two sides covering every vertex with no edge
// between the private parts. Sides are sorted vertex-index sets.
struct Separation {
  std::vector<int> side_a;
  std::vector<int> side_b;
};

// Proper vertex coloring; colors are 1-based indices.
struct Coloring {
  std::vector<int> color_of;  // per vertex, 1..colors
  int colors = 0;
};

inline bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.color_of.size()) != g.vertex_count()) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (c.color_of[v] < 1 || c.color_of[v] > c.colors) return false;
  for (auto [a, b] : g.edges())
    if (c.color_of[a] == c.color_of[b]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// edge-list format
//
// One item per line. Lines whose first non-blank character is '#' are
// comments. "v <name>" declares an isolated vertex; "<a> <b>" declares an
// edge (endpoints are declared on first appearance). Names are arbitrary
// non-whitespace tokens.

inline Graph parse_graph(const std::string& text) {
  std::vector<std::string> declared;
  std::unordered_map<std::string, int> idx;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> edge_set;
  auto intern = [&](const std::string& s) {
    auto it = idx.find(s);
    if (it != idx.end()) return it->second;
    int i = static_cast<int>(declared.size());
    declared.push_back(s);
    idx.emplace(s, i);
    return i;
  };

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0][0] == '#') continue;
    if (tok[0] == "v") {
      if (tok.size() != 2)
        throw ParseError("vertex declaration needs exactly one name", line_no);
      if (idx.count(tok[1]))
        throw ParseError("duplicate declaration of vertex '" + tok[1] + "'", line_no);
      intern(tok[1]);
      continue;
    }
    if (tok.size() != 2)
      throw ParseError("expected 'v <name>' or '<name> <name>'", line_no);
    int a = intern(tok[0]);
    int b = intern(tok[1]);
    if (a == b) throw ParseError("self-loop at '" + tok[0] + "'", line_no);
    int lo = std::min(a, b), hi = std::max(a, b);
    if (!edge_set.emplace(lo, hi).second)
      throw ParseError("duplicate edge '" + tok[0] + " " + tok[1] + "'", line_no);
    edges.emplace_back(lo, hi);
  }
  return Graph(std::move(declared), edges);
}

// Canonical serialization: all vertices as declarations in order, then all
// edges in canonical order. parse(serialize(g)) == g. An edge whose first
// endpoint is literally named "v" (or starts with '#') is emitted with its
// endpoints swapped so the line re-parses as an edge.
inline std::string serialize_graph(const Graph& g) {
  std::string out;
  for (const auto& s : g.names()) {
    out += "v ";
    out += s;
    out += '\n';
  }
  for (auto [a, b] : g.edges()) {
    const std::string& na = g.name(a);
    const std::string& nb = g.name(b);
    bool swap = (na == "v" || na[0] == '#');
    if (swap && (nb == "v" || nb[0] == '#'))
      throw Error("edge '" + na + " " + nb + "' cannot be written in edge-list form");
    out += swap ? nb : na;
    out += ' ';
    out += swap ? na : nb;
    out += '\n';
  }
  return out;
}

// Induced subgraph on the given (sorted) vertex set, preserving name order.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  std::vector<std::string> names;
  names.reserve(keep.size());
  std::vector<int> pos(g.vertex_count(), -1);
  for (int v : keep) {
    pos[v] = static_cast<int>(names.size());
    names.push_back(g.name(v));
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges())
    if (pos[a] >= 0 && pos[b] >= 0) edges.emplace_back(pos[a], pos[b]);
  return Graph(std::move(names), edges);
}

// ---------------------------------------------------------------------------
// metric / convexity primitives

// All vertices on some shortest (u,v)-path.
inline std::vector<int> interval(const Graph& g, int u, int v) {
  int duv = g.dist(u, v);
  if (duv == Graph::kUnreachable)
    throw PreconditionError("interval endpoints lie in different components");
  std::vector<int> out;
  for (int x = 0; x < g.vertex_count(); ++x) {
    int a = g.dist(u, x), b = g.dist(x, v);
    if (a != Graph::kUnreachable && b != Graph::kUnreachable && a + b == duv)
      out.push_back(x);
  }
  return out;
}

struct MedianOutcome {
  enum class Kind { Unique, None, Multiple };
  Kind kind = Kind::None;
  int vertex = -1;               // set when unique
  std::vector<int> candidates;   // full set when multiple
};

// The vertices lying simultaneously on shortest paths between all three
// pairs of a triple.
inline std::vector<int> median_candidates(const Graph& g, int u, int v, int w) {
  int duv = g.dist(u, v), dvw = g.dist(v, w), dwu = g.dist(w, u);
  std::vector<int> out;
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (g.dist(u, x) + g.dist(x, v) != duv) continue;
    if (g.dist(v, x) + g.dist(x, w) != dvw) continue;
    if (g.dist(w, x) + g.dist(x, u) != dwu) continue;
    out.push_back(x);
  }
  return out;
}

inline MedianOutcome median_of(const Graph& g, int u, int v, int w) {
  if (!g.connected()) throw PreconditionError("median_of requires a connected graph");
  MedianOutcome r;
  r.candidates = median_candidates(g, u, v, w);
  if (r.candidates.size() == 1) {
    r.kind = MedianOutcome::Kind::Unique;
    r.vertex = r.candidates[0];
  } else if (r.candidates.empty()) {
    r.kind = MedianOutcome::Kind::None;
  } else {
    r.kind = MedianOutcome::Kind::Multiple;
  }
  return r;
}

// S is convex when every shortest path between members stays inside S.
// Empty sets and singletons are convex by convention.
inline bool is_convex(const Graph& g, const std::vector<int>& set) {
  if (!g.connected()) throw PreconditionError("is_convex requires a connected graph");
  if (set.size() <= 1) return true;
  detail::Bitset in = detail::Bitset::from_vector(g.vertex_count(), set);
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      int u = set[i], v = set[j];
      int duv = g.dist(u, v);
      for (int x = 0; x < g.vertex_count(); ++x) {
        if (in.test(x)) continue;
        if (g.dist(u, x) + g.dist(x, v) == duv) return false;
      }
    }
  }
  return true;
}

// Least fixpoint of interval closure.
inline std::vector<int> convex_hull(const Graph& g, const std::vector<int>& set) {
  if (!g.connected())
    throw PreconditionError("convex_hull requires a connected graph");
  detail::Bitset in = detail::Bitset::from_vector(g.vertex_count(), set);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur = in.to_vector();
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        int duv = g.dist(cur[i], cur[j]);
        for (int x = 0; x < g.vertex_count(); ++x) {
          if (in.test(x)) continue;
          if (g.dist(cur[i], x) + g.dist(x, cur[j]) == duv) {
            in.set(x);
            grew = true;
          }
        }
      }
    }
  }
  return in.to_vector();
}

// ---------------------------------------------------------------------------
// exact solvers

struct CliqueResult {
  int size = 0;
  std::vector<int> members;  // sorted; induces a complete subgraph
};

// Branch and bound maximum clique with greedy-coloring upper bounds.
inline CliqueResult clique_number(const Graph& g) {
  const int n = g.vertex_count();
  CliqueResult best;
  if (n == 0) return best;

  std::vector<detail::Bitset> adj(n, detail::Bitset(n));
  for (auto [a, b] : g.edges()) {
    adj[a].set(b);
    adj[b].set(a);
  }

  std::vector<int> current;
  // candidates arrive ordered; greedy color classes bound the reachable size
  auto search = [&](auto&& self, const std::vector<int>& cand) -> void {
    if (cand.empty()) {
      if (static_cast<int>(current.size()) > best.size) {
        best.size = static_cast<int>(current.size());
        best.members = current;
        std::sort(best.members.begin(), best.members.end());
      }
      return;
    }
    // greedy coloring of the candidate set, in order
    std::vector<int> color(cand.size(), 0);
    std::vector<detail::Bitset> classes;
    std::vector<std::vector<int>> class_members;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      int v = cand[i];
      std::size_t c = 0;
      for (; c < classes.size(); ++c)
        if (!classes[c].intersects(adj[v])) break;
      if (c == classes.size()) {
        classes.emplace_back(n);
        class_members.emplace_back();
      }
      classes[c].set(v);
      class_members[c].push_back(v);
      color[i] = static_cast<int>(c) + 1;
    }
    // branch in reverse color order
    std::vector<std::pair<int, int>> order;  // (color, vertex)
    for (std::size_t i = 0; i < cand.size(); ++i) order.emplace_back(color[i], cand[i]);
    std::sort(order.begin(), order.end());
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      auto [col, v] = order[i];
      if (static_cast<int>(current.size()) + col <= best.size) return;
      std::vector<int> next;
      for (int j = 0; j < i; ++j)
        if (adj[v].test(order[j].second)) next.push_back(order[j].second);
      current.push_back(v);
      self(self, next);
      current.pop_back();
    }
  };

  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  // order by descending degree for better early bounds
  std::stable_sort(all.begin(), all.end(), [&](int a, int b) {
    return g.neighbors(a).size() > g.neighbors(b).size();
  });
  search(search, all);
  return best;
}

struct ChromaticResult {
  int colors = 0;
  Coloring coloring;
};

// Exact chromatic number: iterative deepening from the clique lower bound,
// DSATUR-ordered backtracking, ties broken by lowest color index.
inline ChromaticResult chromatic_number(const Graph& g) {
  const int n = g.vertex_count();
  ChromaticResult r;
  if (n == 0) return r;

  CliqueResult lb = clique_number(g);

  std::vector<detail::Bitset> adj(n, detail::Bitset(n));
  for (auto [a, b] : g.edges()) {
    adj[a].set(b);
    adj[b].set(a);
  }

  std::vector<int> color(n, 0);
  auto try_k = [&](int k) -> bool {
    std::fill(color.begin(), color.end(), 0);
    int colored = 0;
    int max_used = 0;

    auto solve = [&](auto&& self) -> bool {
      if (colored == n) return true;
      // pick uncolored vertex with max saturation, then max degree, then index
      int pick = -1, pick_sat = -1, pick_deg = -1;
      for (int v = 0; v < n; ++v) {
        if (color[v]) continue;
        detail::Bitset seen_colors(k + 1);
        int sat = 0;
        for (int w : g.neighbors(v)) {
          if (color[w] && !seen_colors.test(color[w])) {
            seen_colors.set(color[w]);
            ++sat;
          }
        }
        int deg = static_cast<int>(g.neighbors(v).size());
        if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
          pick = v;
          pick_sat = sat;
          pick_deg = deg;
        }
      }
      int limit = std::min(k, max_used + 1);
      for (int c = 1; c <= limit; ++c) {
        bool clash = false;
        for (int w : g.neighbors(pick))
          if (color[w] == c) {
            clash = true;
            break;
          }
        if (clash) continue;
        color[pick] = c;
        ++colored;
        int prev_max = max_used;
        max_used = std::max(max_used, c);
        if (self(self)) return true;
        color[pick] = 0;
        --colored;
        max_used = prev_max;
      }
      return false;
    };
    return solve(solve);
  };

  for (int k = std::max(lb.size, 1);; ++k) {
    if (try_k(k)) {
      r.colors = k;
      r.coloring.color_of = color;
      r.coloring.colors = k;
      return r;
    }
  }
}

// ---------------------------------------------------------------------------

// Connected components of the graph minus S, ordered by their smallest
// vertex index; vertices inside each component are sorted.
inline std::vector<std::vector<int>> components_without(const Graph& g,
                                                        const std::vector<int>& s) {
  const int n = g.vertex_count();
  std::vector<char> removed(n, 0), seen(n, 0);
  for (int v : s) removed[v] = 1;
  std::vector<std::vector<int>> comps;
  for (int v = 0; v < n; ++v) {
    if (removed[v] || seen[v]) continue;
    std::vector<int> comp{v};
    seen[v] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (int w : g.neighbors(comp[head]))
        if (!removed[w] && !seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_separation(const Graph& g, const Separation& s) {
  detail::Bitset a = detail::Bitset::from_vector(g.vertex_count(), s.side_a);
  detail::Bitset b = detail::Bitset::from_vector(g.vertex_count(), s.side_b);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!a.test(v) && !b.test(v)) return false;
  for (auto [x, y] : g.edges()) {
    bool xa = a.test(x) && !b.test(x), yb = b.test(y) && !a.test(y);
    bool xb = b.test(x) && !a.test(x), ya = a.test(y) && !b.test(y);
    if ((xa && yb) || (xb && ya)) return false;
  }
  return true;
}

// Two separations are laminar when some orientation nests; otherwise they
// cross.
inline bool laminar(const Separation& s, const Separation& t) {
  auto sub = detail::sorted_subset;
  const auto &a1 = s.side_a, &a2 = s.side_b, &b1 = t.side_a, &b2 = t.side_b;
  if (sub(a1, b1) && sub(b2, a2)) return true;
  if (sub(a1, b2) && sub(b1, a2)) return true;
  if (sub(a2, b1) && sub(b2, a1)) return true;
  if (sub(a2, b2) && sub(b1, a1)) return true;
  return false;
}

}  // namespace mwkit
