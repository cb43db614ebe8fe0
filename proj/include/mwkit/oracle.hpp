#pragma once

#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mwkit/build.hpp"
#include "mwkit/decomp.hpp"
#include "mwkit/graph.hpp"
#include "mwkit/median.hpp"
#include "mwkit/util.hpp"

namespace mwkit {

// Hard size bounds for the exhaustive oracles. Exceeding one raises a
// BoundError; nothing is truncated silently.
struct OracleLimits {
  int treewidth_max_n = 8;
  int mwi_max_n_low = 7;   // i <= 2
  int mwi_max_n_high = 6;  // i >= 3
  int kw_max_n = 20;
  int bramble_max_n = 20;
  int reduce_budget = 14;
  int simplex_budget = 4096;

  void override_max_n(int n) {
    treewidth_max_n = n;
    mwi_max_n_low = n;
    mwi_max_n_high = n;
    kw_max_n = n;
    bramble_max_n = n;
  }
};

// An exact parameter value together with a replayable witness.
struct WidthResult {
  std::string parameter;
  int value = 0;
  std::string method;
  double elapsed_ms = 0.0;
  std::optional<Decomposition> decomposition;
  std::optional<Coloring> coloring;
  std::optional<std::vector<std::string>> vertex_set;
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// ---- elimination machinery (n <= 25-ish, masks in 32-bit words) -----------

// Neighbors of v after eliminating `eliminated`: vertices outside reachable
// from v through eliminated vertices.
inline std::uint32_t elimination_neighborhood(const std::vector<std::uint32_t>& adj, int v,
                                              std::uint32_t eliminated) {
  std::uint32_t seen = std::uint32_t{1} << v;
  std::uint32_t frontier = adj[v];
  std::uint32_t result = 0;
  while (true) {
    std::uint32_t fresh = frontier & ~seen;
    if (!fresh) break;
    seen |= fresh;
    result |= fresh & ~eliminated;
    frontier = 0;
    std::uint32_t inside = fresh & eliminated;
    while (inside) {
      int w = std::countr_zero(inside);
      inside &= inside - 1;
      frontier |= adj[w];
    }
  }
  return result & ~(std::uint32_t{1} << v) & ~eliminated;
}

// Chordal completion from eliminating in the given order.
inline std::vector<std::uint32_t> fill_in(const std::vector<std::uint32_t>& adj,
                                          const std::vector<int>& order) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::uint32_t> filled = adj;
  std::uint32_t gone = 0;
  for (int v : order) {
    std::uint32_t live = filled[v] & ~gone;
    std::uint32_t rest = live;
    while (rest) {
      int a = std::countr_zero(rest);
      rest &= rest - 1;
      filled[a] |= live & ~(std::uint32_t{1} << a);
    }
    gone |= std::uint32_t{1} << v;
  }
  (void)n;
  return filled;
}

// Maximal cliques of a chordal graph with perfect elimination order:
// the inclusion-maximal bags {v} + later neighbors.
inline std::vector<std::uint32_t> chordal_maximal_cliques(const std::vector<std::uint32_t>& filled,
                                                          const std::vector<int>& order) {
  const int n = static_cast<int>(filled.size());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<std::uint32_t> bags;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::uint32_t bag = std::uint32_t{1} << v;
    std::uint32_t nb = filled[v];
    while (nb) {
      int w = std::countr_zero(nb);
      nb &= nb - 1;
      if (pos[w] > i) bag |= std::uint32_t{1} << w;
    }
    bags.push_back(bag);
  }
  std::sort(bags.begin(), bags.end());
  bags.erase(std::unique(bags.begin(), bags.end()), bags.end());
  std::vector<std::uint32_t> maximal;
  for (std::size_t i = 0; i < bags.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < bags.size() && !dominated; ++j)
      if (i != j && (bags[i] & ~bags[j]) == 0) dominated = true;
    if (!dominated) maximal.push_back(bags[i]);
  }
  return maximal;
}

// Clique tree: maximum-weight spanning tree of the clique intersection
// graph (weights |Ci cap Cj|), which is a valid tree decomposition for a
// chordal completion. Deterministic Kruskal with canonical tie-breaking;
// re-validated before returning.
inline Decomposition clique_tree(const Graph& g, const std::vector<std::uint32_t>& filled,
                                 const std::vector<int>& order) {
  std::vector<std::uint32_t> cliques = chordal_maximal_cliques(filled, order);
  if (cliques.empty()) cliques.push_back(0);  // empty graph: one empty bag
  const int m = static_cast<int>(cliques.size());

  struct Cand {
    int weight, i, j;
  };
  std::vector<Cand> cands;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      cands.push_back({std::popcount(cliques[i] & cliques[j]), i, j});
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return std::pair{a.i, a.j} < std::pair{b.i, b.j};
  });
  std::vector<int> parent(m);
  for (int i = 0; i < m; ++i) parent[i] = i;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<std::pair<int, int>> edges;
  for (const Cand& c : cands) {
    int a = find(c.i), b = find(c.j);
    if (a == b) continue;
    parent[std::max(a, b)] = std::min(a, b);
    edges.emplace_back(c.i, c.j);
  }

  std::vector<std::string> names;
  std::vector<std::vector<int>> bags;
  for (int i = 0; i < m; ++i) {
    names.push_back("t" + std::to_string(i));
    std::vector<int> bag;
    std::uint32_t rest = cliques[i];
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      bag.push_back(v);
    }
    bags.push_back(std::move(bag));
  }
  Decomposition out(Graph(std::move(names), edges), g, std::move(bags));
  ValidationReport rep = validate(out);
  if (!rep.ok() || !is_tree(out.host()))
    throw InternalError("clique tree assembly failed validation");
  return out;
}

inline std::vector<std::uint32_t> graph_adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.vertex_count(), 0);
  for (auto [a, b] : g.edges()) {
    adj[a] |= std::uint32_t{1} << b;
    adj[b] |= std::uint32_t{1} << a;
  }
  return adj;
}

// A chordal completion keyed by its maximal-clique family, with one
// elimination order realizing it.
struct Completion {
  std::vector<std::uint32_t> cliques;  // sorted: canonical signature
  std::vector<std::uint32_t> filled;
  std::vector<int> order;
};

// All distinct elimination fill-ins, deduplicated by maximal-clique family.
inline std::vector<Completion> elimination_completions(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint32_t> adj = graph_adjacency_masks(g);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<Completion> out;
  do {
    std::vector<std::uint32_t> filled = fill_in(adj, order);
    std::vector<std::uint32_t> cliques = chordal_maximal_cliques(filled, order);
    if (seen.insert(cliques).second)
      out.push_back({std::move(cliques), std::move(filled), order});
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// treewidth

// Exact treewidth as the minimum over elimination orders of the largest
// back-degree, by dynamic programming over eliminated subsets. Witness:
// the clique tree of an optimal fill-in.
inline WidthResult treewidth_exact(const Graph& g, const OracleLimits& lim = {}) {
  detail::Stopwatch clock;
  const int n = g.vertex_count();
  if (n > lim.treewidth_max_n)
    throw BoundError("treewidth_exact: " + std::to_string(n) + " vertices exceeds the bound of " +
                     std::to_string(lim.treewidth_max_n));
  if (n > 25) throw BoundError("treewidth_exact: subset table would be too large");
  WidthResult r;
  r.parameter = "tw";
  r.method = "elimination-dp";
  if (n == 0) {
    r.value = -1;
    r.decomposition = trivial_decomposition(g);
    r.elapsed_ms = clock.ms();
    return r;
  }

  std::vector<std::uint32_t> adj = detail::graph_adjacency_masks(g);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<int> best(std::size_t{1} << n, n + 1);
  std::vector<int> choice(std::size_t{1} << n, -1);
  best[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::uint32_t rest = s;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      std::uint32_t prev = s & ~(std::uint32_t{1} << v);
      if (best[prev] > n) continue;
      int degree = std::popcount(detail::elimination_neighborhood(adj, v, prev));
      int value = std::max(best[prev], degree);
      if (value < best[s]) {
        best[s] = value;
        choice[s] = v;
      }
    }
  }
  r.value = best[full];

  std::vector<int> order;
  for (std::uint32_t s = full; s;) {
    int v = choice[s];
    order.push_back(v);
    s &= ~(std::uint32_t{1} << v);
  }
  std::reverse(order.begin(), order.end());
  Decomposition witness = detail::clique_tree(g, detail::fill_in(adj, order), order);
  if (witness.width() - 1 != r.value)
    throw InternalError("treewidth witness width disagrees with the DP value");
  r.decomposition = std::move(witness);
  r.elapsed_ms = clock.ms();
  return r;
}

// ---------------------------------------------------------------------------
// i-medianwidth

// Exact i-medianwidth: minimize, over unordered i-tuples of elimination
// fill-ins (deduplicated by maximal-clique family), the largest
// intersection of one maximal clique per completion; witness is the product
// of the matching clique trees. Restricting to clique bags is lossless:
// filling a tree decomposition into a chordal completion only shrinks bags,
// so the tuple maximum never grows, and clique trees are themselves tree
// decompositions.
inline WidthResult mw_i_exact(const Graph& g, int i, const OracleLimits& lim = {}) {
  if (i < 1) throw PreconditionError("mw_i_exact needs i >= 1");
  detail::Stopwatch clock;
  const int n = g.vertex_count();
  const int bound = i <= 2 ? lim.mwi_max_n_low : lim.mwi_max_n_high;
  if (n > bound)
    throw BoundError("mw_i_exact: " + std::to_string(n) + " vertices exceeds the bound of " +
                     std::to_string(bound) + " for i=" + std::to_string(i));
  WidthResult r;
  r.parameter = "mw_" + std::to_string(i);
  r.method = "completion-tuples";
  if (n == 0) {
    r.value = 0;
    r.decomposition = trivial_decomposition(g);
    r.elapsed_ms = clock.ms();
    return r;
  }

  const int floor_value = clique_number(g).size;
  std::vector<detail::Completion> comps = detail::elimination_completions(g);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;

  // width of one tuple: max over clique choices of the intersection size;
  // gives up early once it cannot beat the incumbent
  auto tuple_width = [&](const std::vector<std::size_t>& tup, int incumbent) {
    int width = 0;
    auto rec = [&](auto&& self, int depth, std::uint32_t inter) -> bool {
      if (std::popcount(inter) <= width) return false;  // cannot raise the max
      if (depth == i) {
        width = std::popcount(inter);
        return width >= incumbent;  // tuple already no better than incumbent
      }
      for (std::uint32_t c : comps[tup[depth]].cliques)
        if (self(self, depth + 1, inter & c)) return true;
      return false;
    };
    rec(rec, 0, full);
    return width;
  };

  std::vector<std::size_t> tuple(i, 0);
  std::vector<std::size_t> best_tuple(i, 0);
  int best = n + 1;
  while (true) {
    int width = tuple_width(tuple, best);
    if (width < best) {
      best = width;
      best_tuple = tuple;
      if (best <= floor_value) break;  // universal clique floor reached
    }
    // next nondecreasing index tuple
    int j = i - 1;
    while (j >= 0 && tuple[j] + 1 >= comps.size()) --j;
    if (j < 0) break;
    ++tuple[j];
    for (int t = j + 1; t < i; ++t) tuple[t] = tuple[j];
  }
  r.value = best;

  std::vector<Decomposition> factors;
  for (std::size_t idx : best_tuple)
    factors.push_back(detail::clique_tree(g, comps[idx].filled, comps[idx].order));
  Decomposition witness = product_decomposition(factors);
  IMedianCheck imc = check_i_median(witness, i);
  if (!imc.ok || witness.width() != best)
    throw InternalError("mw_i witness failed replay");
  r.decomposition = std::move(witness);
  r.elapsed_ms = clock.ms();
  return r;
}

// ---------------------------------------------------------------------------
// medianwidth / smooth medianwidth

// Medianwidth equals the clique number. Default witness: clique-bag
// reduction from the trivial decomposition. When the doubling budget cannot
// cover the non-edge count, the witness host switches to the graph of
// complete subgraphs with its natural clique bags.
inline WidthResult medianwidth_exact(const Graph& g, const OracleLimits& lim = {}) {
  detail::Stopwatch clock;
  WidthResult r;
  r.parameter = "mw";
  CliqueResult omega = clique_number(g);
  r.value = omega.size;

  long nonedges =
      static_cast<long>(g.vertex_count()) * (g.vertex_count() - 1) / 2 - g.edge_count();
  std::optional<Decomposition> witness;
  if (g.vertex_count() == 0) {
    r.method = "empty";
    witness = trivial_decomposition(g);
  } else if (nonedges <= lim.reduce_budget) {
    r.method = "clique-bag-reduction";
    witness = reduce_to_clique_bags(trivial_decomposition(g), lim.reduce_budget);
  } else {
    r.method = "simplex-hosted";
    std::vector<std::vector<int>> cliques = detail::enumerate_cliques(g, lim.simplex_budget);
    std::vector<std::string> names;
    for (const auto& k : cliques) names.push_back(detail::clique_node_name(g, k));
    Graph host = simplex_graph(g, lim.simplex_budget);
    std::vector<std::vector<int>> bags(host.vertex_count());
    for (std::size_t h = 0; h < cliques.size(); ++h) {
      if (host.name(static_cast<int>(h)) != names[h])
        throw InternalError("simplex host enumeration out of sync");
      bags[h] = cliques[h];
    }
    witness = Decomposition(std::move(host), g, std::move(bags));
  }
  ValidationReport rep = validate(*witness);
  if (!rep.ok() || witness->width() != r.value ||
      (g.vertex_count() > 0 && !rep.host_is_median))
    throw InternalError("medianwidth witness failed replay");
  r.decomposition = std::move(witness);
  if (omega.size > 0) {
    std::vector<std::string> names;
    for (int v : omega.members) names.push_back(g.name(v));
    r.vertex_set = names;
  }
  r.elapsed_ms = clock.ms();
  return r;
}

// Smooth medianwidth equals the chromatic number. Witness: the chromatic
// decomposition of an optimal coloring (the upper bound); the lower bound
// is re-derived mechanically by extracting a proper coloring back out of
// the witness.
inline WidthResult smw_exact(const Graph& g, const OracleLimits& lim = {}) {
  (void)lim;
  detail::Stopwatch clock;
  WidthResult r;
  r.parameter = "smw";
  r.method = "chromatic-decomposition";
  ChromaticResult chi = chromatic_number(g);
  r.value = chi.colors;
  if (g.vertex_count() == 0) {
    r.elapsed_ms = clock.ms();
    return r;
  }
  Decomposition witness = chromatic_decomposition(g, chi.coloring);
  ValidationReport rep = validate(witness);
  SmoothReport smooth = check_theta_smooth(witness);
  if (!rep.ok() || !smooth.smooth || witness.width() != chi.colors)
    throw InternalError("smw witness failed replay");
  Coloring extracted = coloring_from_smooth(witness);
  if (!is_proper_coloring(g, extracted) || extracted.colors > witness.width())
    throw InternalError("smw lower-bound extraction failed");
  r.decomposition = std::move(witness);
  r.coloring = chi.coloring;
  r.elapsed_ms = clock.ms();
  return r;
}

// ---------------------------------------------------------------------------
// clique-class width

// min over vertex subsets S of the largest |S + component of G - S|
// (just |S| when nothing remains).
inline WidthResult kw_exact(const Graph& g, const OracleLimits& lim = {}) {
  detail::Stopwatch clock;
  const int n = g.vertex_count();
  if (n > lim.kw_max_n)
    throw BoundError("kw_exact: " + std::to_string(n) + " vertices exceeds the bound of " +
                     std::to_string(lim.kw_max_n));
  WidthResult r;
  r.parameter = "kw";
  r.method = "subset-sweep";
  if (n == 0) {
    r.value = 0;
    r.vertex_set = std::vector<std::string>{};
    r.elapsed_ms = clock.ms();
    return r;
  }
  int best = n + 1;
  std::uint32_t best_mask = 0;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<int> s;
  for (std::uint32_t mask = 0;; ++mask) {
    int s_size = std::popcount(mask);
    if (s_size < best) {
      s.clear();
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) s.push_back(v);
      auto comps = components_without(g, s);
      int value = s_size;
      for (const auto& c : comps)
        value = std::max(value, s_size + static_cast<int>(c.size()));
      if (value < best) {
        best = value;
        best_mask = mask;
      }
    }
    if (mask == full) break;
  }
  r.value = best;
  std::vector<std::string> names;
  for (int v = 0; v < n; ++v)
    if (best_mask >> v & 1) names.push_back(g.name(v));
  r.vertex_set = names;
  r.elapsed_ms = clock.ms();
  return r;
}

// ---------------------------------------------------------------------------
// brambles

// A family of connected, pairwise touching vertex sets.
struct Bramble {
  std::vector<std::vector<int>> elements;
};

inline void validate_bramble(const Graph& g, const Bramble& b) {
  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    const auto& el = b.elements[i];
    if (el.empty())
      throw PreconditionError("bramble element " + std::to_string(i) + " is empty");
    std::vector<char> in(g.vertex_count(), 0), seen(g.vertex_count(), 0);
    for (int v : el) in[v] = 1;
    std::vector<int> stack{el[0]};
    seen[el[0]] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
    }
    if (count != static_cast<int>(el.size()))
      throw PreconditionError("bramble element " + std::to_string(i) + " is not connected");
  }
  for (std::size_t i = 0; i < b.elements.size(); ++i)
    for (std::size_t j = i + 1; j < b.elements.size(); ++j) {
      const auto& x = b.elements[i];
      const auto& y = b.elements[j];
      bool touch = !detail::sorted_intersection(x, y).empty();
      for (std::size_t a = 0; a < x.size() && !touch; ++a)
        for (int w : y)
          if (g.has_edge(x[a], w)) {
            touch = true;
            break;
          }
      if (!touch)
        throw PreconditionError("bramble elements " + std::to_string(i) + " and " +
                                std::to_string(j) + " do not touch");
    }
}

struct BrambleOrderResult {
  int order = 0;
  std::vector<int> cover;  // a minimum cover, sorted
};

// Exact minimum cover over the bramble elements, branch and bound on the
// least-covered element.
inline BrambleOrderResult bramble_order(const Graph& g, const Bramble& b,
                                        const OracleLimits& lim = {}) {
  if (g.vertex_count() > lim.bramble_max_n)
    throw BoundError("bramble_order: graph exceeds the bound of " +
                     std::to_string(lim.bramble_max_n));
  validate_bramble(g, b);
  const int n = g.vertex_count();
  std::vector<std::uint32_t> elems;
  for (const auto& el : b.elements) {
    std::uint32_t m = 0;
    for (int v : el) m |= std::uint32_t{1} << v;
    elems.push_back(m);
  }

  // greedy cover as the starting incumbent
  std::vector<int> incumbent;
  {
    std::vector<std::uint32_t> open = elems;
    while (!open.empty()) {
      int best_v = -1, best_hits = -1;
      for (int v = 0; v < n; ++v) {
        int hits = 0;
        for (std::uint32_t e : open)
          if (e >> v & 1) ++hits;
        if (hits > best_hits) {
          best_hits = hits;
          best_v = v;
        }
      }
      incumbent.push_back(best_v);
      std::vector<std::uint32_t> next;
      for (std::uint32_t e : open)
        if (!(e >> best_v & 1)) next.push_back(e);
      open = std::move(next);
    }
  }

  std::vector<int> chosen;
  auto search = [&](auto&& self, std::uint32_t cover_mask) -> void {
    int pick = -1;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (elems[i] & cover_mask) continue;
      if (pick < 0 || std::popcount(elems[i]) < std::popcount(elems[pick]))
        pick = static_cast<int>(i);
    }
    if (pick < 0) {
      if (chosen.size() < incumbent.size()) incumbent = chosen;
      return;
    }
    if (chosen.size() + 1 >= incumbent.size()) return;
    std::uint32_t e = elems[pick];
    while (e) {
      int v = std::countr_zero(e);
      e &= e - 1;
      chosen.push_back(v);
      self(self, cover_mask | (std::uint32_t{1} << v));
      chosen.pop_back();
    }
  };
  search(search, 0);

  BrambleOrderResult r;
  std::sort(incumbent.begin(), incumbent.end());
  r.order = static_cast<int>(incumbent.size());
  r.cover = std::move(incumbent);
  return r;
}

namespace detail {

// All inclusion-minimal covers, deduplicated.
inline std::vector<std::uint32_t> minimal_covers(const std::vector<std::uint32_t>& elems) {
  std::set<std::uint32_t> out;
  auto covers = [&](std::uint32_t mask) {
    for (std::uint32_t e : elems)
      if (!(e & mask)) return false;
    return true;
  };
  auto search = [&](auto&& self, std::uint32_t mask) -> void {
    int pick = -1;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (!(elems[i] & mask)) {
        pick = static_cast<int>(i);
        break;
      }
    if (pick < 0) {
      std::uint32_t m = mask;
      bool shrunk = true;
      while (shrunk) {
        shrunk = false;
        std::uint32_t rest = m;
        while (rest) {
          int v = std::countr_zero(rest);
          rest &= rest - 1;
          if (covers(m & ~(std::uint32_t{1} << v))) {
            m &= ~(std::uint32_t{1} << v);
            shrunk = true;
            break;
          }
        }
      }
      out.insert(m);
      return;
    }
    std::uint32_t e = elems[pick];
    while (e) {
      int v = std::countr_zero(e);
      e &= e - 1;
      self(self, mask | (std::uint32_t{1} << v));
    }
  };
  search(search, 0);
  return {out.begin(), out.end()};
}

}  // namespace detail

// Inner minimum of the bramble obstruction: over one cover per bramble, the
// smallest achievable intersection. Enumerates inclusion-minimal covers,
// which suffices: shrinking a cover never grows the intersection.
inline int bramble_intersection_number(const Graph& g, const std::vector<Bramble>& brambles,
                                       const OracleLimits& lim = {}) {
  if (brambles.empty()) throw PreconditionError("needs at least one bramble");
  if (g.vertex_count() > lim.bramble_max_n)
    throw BoundError("bramble_intersection_number: graph exceeds the bound of " +
                     std::to_string(lim.bramble_max_n));
  const int n = g.vertex_count();
  std::vector<std::vector<std::uint32_t>> cover_lists;
  for (const auto& b : brambles) {
    validate_bramble(g, b);
    std::vector<std::uint32_t> elems;
    for (const auto& el : b.elements) {
      std::uint32_t m = 0;
      for (int v : el) m |= std::uint32_t{1} << v;
      elems.push_back(m);
    }
    cover_lists.push_back(detail::minimal_covers(elems));
  }
  const std::uint32_t full = n == 0 ? 0 : (std::uint32_t{1} << n) - 1;
  int best = n + 1;
  auto rec = [&](auto&& self, std::size_t depth, std::uint32_t inter) -> bool {
    if (depth == cover_lists.size()) {
      best = std::min(best, std::popcount(inter));
      return best == 0;  // cannot go lower, stop everything
    }
    for (std::uint32_t c : cover_lists[depth])
      if (self(self, depth + 1, inter & c)) return true;
    return false;
  };
  rec(rec, 0, full);
  return best;
}

// ---------------------------------------------------------------------------

// Structured record: {parameter, value, witness-document, method, elapsed}.
inline std::string serialize_width_result(const WidthResult& r) {
  detail::ordered_json j;
  j["parameter"] = r.parameter;
  j["value"] = r.value;
  if (r.decomposition)
    j["witness"] = detail::ordered_json::parse(serialize_decomposition(*r.decomposition));
  else if (r.coloring) {
    detail::ordered_json c = detail::ordered_json::object();
    c["colors"] = r.coloring->colors;
    c["assignment"] = r.coloring->color_of;
    j["witness"] = c;
  } else if (r.vertex_set) {
    j["witness"] = *r.vertex_set;
  } else {
    j["witness"] = nullptr;
  }
  j["method"] = r.method;
  j["elapsed_ms"] = r.elapsed_ms;
  return detail::dump_document(j);
}

}  // namespace mwkit
