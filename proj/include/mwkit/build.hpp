#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mwkit/decomp.hpp"
#include "mwkit/graph.hpp"
#include "mwkit/median.hpp"
#include "mwkit/util.hpp"

namespace mwkit {

namespace detail {

// Mixed-radix walker over tuples (i_1..i_k) with radix sizes[j].
inline bool next_tuple(std::vector<int>& t, const std::vector<int>& sizes) {
  for (int j = static_cast<int>(t.size()) - 1; j >= 0; --j) {
    if (++t[j] < sizes[j]) return true;
    t[j] = 0;
  }
  return false;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// chromatic decomposition

// Host: Cartesian product of one path per color class, path nodes labelled
// by the class members in canonical order. The bag of a host node is the
// transversal it is labelled with, so every bag has exactly one vertex per
// color class and the width equals the number of colors.
inline Decomposition chromatic_decomposition(const Graph& g, const Coloring& c) {
  if (g.vertex_count() == 0)
    return Decomposition(Graph({"0"}, {}), g, {{}});
  if (!is_proper_coloring(g, c))
    throw PreconditionError("chromatic_decomposition requires a proper coloring");
  const int k = c.colors;
  std::vector<std::vector<int>> classes(k);
  for (int v = 0; v < g.vertex_count(); ++v) classes[c.color_of[v] - 1].push_back(v);
  for (const auto& cl : classes)
    if (cl.empty())
      throw PreconditionError("chromatic_decomposition requires every color class nonempty");

  std::optional<Graph> host;
  for (int i = 0; i < k; ++i) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t p = 0; p < classes[i].size(); ++p) {
      names.push_back(g.name(classes[i][p]));
      if (p + 1 < classes[i].size())
        edges.emplace_back(static_cast<int>(p), static_cast<int>(p) + 1);
    }
    Graph path(std::move(names), edges);
    host = host ? cartesian_product(*host, path) : path;
  }

  // host node index follows the left-fold product: mixed radix, class 0 major
  std::vector<int> sizes(k);
  for (int i = 0; i < k; ++i) sizes[i] = static_cast<int>(classes[i].size());
  std::vector<std::vector<int>> bags(host->vertex_count());
  std::vector<int> tuple(k, 0);
  int node = 0;
  do {
    for (int i = 0; i < k; ++i) bags[node].push_back(classes[i][tuple[i]]);
    ++node;
  } while (detail::next_tuple(tuple, sizes));
  if (node != host->vertex_count())
    throw InternalError("lattice node enumeration out of sync");
  return Decomposition(std::move(*host), g, std::move(bags));
}

// ---------------------------------------------------------------------------
// clique-bag reduction

// While some bag holds a non-adjacent pair, double the host with K2 and
// drop one vertex of the pair from each copy. Every step lowers the count
// of co-bagged non-edges by exactly one, so the loop ends with all bags
// cliques. Budget counts doubling steps.
inline Decomposition reduce_to_clique_bags(const Decomposition& input, int budget = 14) {
  const Graph& g = input.subject();

  auto co_bagged_nonedges = [&](const Decomposition& d) {
    std::vector<detail::Bitset> supports(g.vertex_count(),
                                         detail::Bitset(d.host().vertex_count()));
    for (int h = 0; h < d.host().vertex_count(); ++h)
      for (int v : d.bag(h)) supports[v].set(h);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v = u + 1; v < g.vertex_count(); ++v)
        if (!g.has_edge(u, v) && supports[u].intersects(supports[v]))
          pairs.emplace_back(u, v);
    return pairs;
  };

  Decomposition d = input;
  std::size_t beta = co_bagged_nonedges(d).size();
  Graph k2({"0", "1"}, {{0, 1}});
  for (int step = 0; beta > 0; ++step) {
    if (step >= budget)
      throw BoundError("clique-bag reduction budget of " + std::to_string(budget) +
                       " steps exhausted with " + std::to_string(beta) +
                       " co-bagged non-edges remaining");
    auto [u, v] = co_bagged_nonedges(d).front();  // lexicographically least
    Graph host = cartesian_product(d.host(), k2);
    std::vector<std::vector<int>> bags(host.vertex_count());
    for (int h = 0; h < d.host().vertex_count(); ++h) {
      for (int x : d.bag(h)) {
        if (x != u) bags[2 * h].push_back(x);      // copy "|0" drops the smaller vertex
        if (x != v) bags[2 * h + 1].push_back(x);  // copy "|1" drops the larger
      }
    }
    d = Decomposition(std::move(host), g, std::move(bags));
    std::size_t nbeta = co_bagged_nonedges(d).size();
    if (nbeta != beta - 1)
      throw InternalError("doubling step changed the non-edge count by " +
                          std::to_string(static_cast<long>(beta) - static_cast<long>(nbeta)) +
                          ", expected 1");
    beta = nbeta;
  }
  for (const auto& bag : d.bags())
    for (std::size_t i = 0; i < bag.size(); ++i)
      for (std::size_t j = i + 1; j < bag.size(); ++j)
        if (!g.has_edge(bag[i], bag[j]))
          throw InternalError("reduction finished with a non-clique bag");
  return d;
}

// ---------------------------------------------------------------------------
// products and splits of tree decompositions

// Host: Cartesian product of the tree hosts; bag of a node tuple: the
// intersection of the factor bags.
inline Decomposition product_decomposition(const std::vector<Decomposition>& tds) {
  if (tds.empty()) throw PreconditionError("product_decomposition needs at least one input");
  const Graph& g = tds[0].subject();
  for (const auto& d : tds) {
    if (!(d.subject() == g))
      throw PreconditionError("product_decomposition inputs must share one subject");
    if (!is_tree(d.host()))
      throw PreconditionError("product_decomposition inputs must be tree decompositions");
    ValidationReport rep = validate(d);
    if (!rep.ok())
      throw PreconditionError("product_decomposition input violates " +
                              rep.violations.front().axiom + ": " +
                              rep.violations.front().witness);
  }
  if (tds.size() == 1) return tds[0];

  Graph host = tds[0].host();
  for (std::size_t j = 1; j < tds.size(); ++j) host = cartesian_product(host, tds[j].host());

  std::vector<int> sizes;
  for (const auto& d : tds) sizes.push_back(d.host().vertex_count());
  std::vector<std::vector<int>> bags(host.vertex_count());
  std::vector<int> tuple(tds.size(), 0);
  int node = 0;
  do {
    std::vector<int> acc = tds[0].bag(tuple[0]);
    for (std::size_t j = 1; j < tds.size() && !acc.empty(); ++j)
      acc = detail::sorted_intersection(acc, tds[j].bag(tuple[j]));
    bags[node++] = std::move(acc);
  } while (detail::next_tuple(tuple, sizes));

  Decomposition out(std::move(host), g, std::move(bags));
  ValidationReport rep = validate(out);
  if (!rep.ok()) throw InternalError("product of valid tree decompositions failed validation");
  return out;
}

// One tree decomposition per embedding factor: the bag at a factor node is
// the union of the host bags over its fiber. The originals are recoverable:
// each host bag equals the intersection of the returned bags at its
// coordinates (checked here).
inline std::vector<Decomposition> split_tree_decompositions(const Decomposition& d) {
  MedianReport med = check_median(d.host());
  if (!med.median)
    throw PreconditionError("split_tree_decompositions requires a median host (" + med.reason + ")");
  TreeProductEmbedding emb = embed_tree_product(d.host(), /*verify=*/false);

  std::vector<Decomposition> out;
  for (std::size_t j = 0; j < emb.factors.size(); ++j) {
    std::vector<detail::Bitset> acc(emb.factors[j].vertex_count(),
                                    detail::Bitset(d.subject().vertex_count()));
    for (int h = 0; h < d.host().vertex_count(); ++h)
      for (int v : d.bag(h)) acc[emb.coords[h][j]].set(v);
    std::vector<std::vector<int>> bags;
    for (auto& b : acc) bags.push_back(b.to_vector());
    Decomposition td(emb.factors[j], d.subject(), std::move(bags));
    ValidationReport rep = validate(td);
    if (!rep.ok() || !is_tree(td.host()))
      throw InternalError("factor projection is not a valid tree decomposition");
    out.push_back(std::move(td));
  }

  for (int h = 0; h < d.host().vertex_count(); ++h) {
    std::vector<int> acc = out[0].bag(emb.coords[h][0]);
    for (std::size_t j = 1; j < out.size(); ++j)
      acc = detail::sorted_intersection(acc, out[j].bag(emb.coords[h][j]));
    if (acc != d.bag(h))
      throw InternalError("coordinate bag intersections do not reproduce the host bags");
  }
  return out;
}

// ---------------------------------------------------------------------------
// coloring extraction from a smooth decomposition

// Peels peripheral sides one at a time: the two surplus vertices of the
// peeled class are non-adjacent and get merged; the shrunken decomposition
// stays valid and smooth (asserted at every level). Unwinding the merges
// colors the graph with at most width-many colors.
inline Coloring coloring_from_smooth(const Decomposition& input) {
  {
    ValidationReport rep = validate(input);
    if (!rep.ok())
      throw PreconditionError("coloring_from_smooth requires a valid decomposition");
    if (!rep.host_is_median)
      throw PreconditionError("coloring_from_smooth requires a median host");
    SmoothReport sm = check_theta_smooth(input);
    if (!sm.smooth)
      throw PreconditionError("coloring_from_smooth requires a theta-smooth decomposition");
  }
  const int width = input.width();

  Decomposition d = input;
  std::vector<std::pair<std::string, std::string>> merges;  // (removed, kept)
  while (d.host().vertex_count() > 1) {
    std::vector<ThetaClass> classes = theta_classes(d.host(), false);
    std::vector<PeripheralSide> peripherals = peripheral_sets(d.host(), classes);
    if (peripherals.empty())
      throw InternalError("median host with several nodes but no peripheral side");
    const PeripheralSide& p = peripherals.front();  // least class, a-side first
    const ThetaClass& cls = classes[p.class_index];

    SideBagUnions u = bag_side_unions(d, cls);
    const std::vector<int>& boundary_peel = p.a_side ? u.boundary_a : u.boundary_b;
    const std::vector<int>& boundary_keep = p.a_side ? u.boundary_b : u.boundary_a;
    std::vector<int> surplus_peel = detail::sorted_difference(boundary_peel, boundary_keep);
    std::vector<int> surplus_keep = detail::sorted_difference(boundary_keep, boundary_peel);
    if (surplus_peel.size() != 1 || surplus_keep.size() != 1)
      throw InternalError("smooth decomposition lost its singleton surplus");
    int va = surplus_peel[0], vb = surplus_keep[0];
    if (d.subject().has_edge(va, vb))
      throw InternalError("surplus vertices of a smooth class are adjacent");

    const std::vector<int>& keep_side = p.a_side ? cls.side_b : cls.side_a;
    // the peeled vertex must live entirely inside the peeled peripheral set
    for (int h : d.support(va))
      if (detail::sorted_contains(keep_side, h))
        throw InternalError("peeled surplus vertex has support outside the peripheral set");

    // contract va into vb in the subject
    const Graph& g = d.subject();
    std::vector<int> keep_vertices;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (v != va) keep_vertices.push_back(v);
    std::vector<int> new_of(g.vertex_count(), -1);
    std::vector<std::string> names;
    for (int v : keep_vertices) {
      new_of[v] = static_cast<int>(names.size());
      names.push_back(g.name(v));
    }
    std::set<std::pair<int, int>> edge_set;
    for (auto [a, b] : g.edges()) {
      int x = a == va ? vb : a;
      int y = b == va ? vb : b;
      if (x == y) continue;
      int nx = new_of[x], ny = new_of[y];
      edge_set.emplace(std::min(nx, ny), std::max(nx, ny));
    }
    Graph contracted(std::move(names),
                     std::vector<std::pair<int, int>>(edge_set.begin(), edge_set.end()));

    // drop the peeled host side, restrict bags
    Graph new_host = induced_subgraph(d.host(), keep_side);
    std::vector<std::vector<int>> bags(new_host.vertex_count());
    for (std::size_t idx = 0; idx < keep_side.size(); ++idx)
      for (int v : d.bag(keep_side[idx]))
        if (v != va) bags[idx].push_back(new_of[v]);

    merges.emplace_back(g.name(va), g.name(vb));
    d = Decomposition(std::move(new_host), std::move(contracted), std::move(bags));

    ValidationReport rep = validate(d);
    if (!rep.ok() || !rep.host_is_median)
      throw InternalError("contracted decomposition failed validation");
    if (!check_theta_smooth(d).smooth)
      throw InternalError("contracted decomposition lost theta-smoothness");
  }

  // base: a single bag, distinct colors in canonical order
  std::map<std::string, int> color;
  {
    const std::vector<int>& bag = d.bag(0);
    for (std::size_t i = 0; i < bag.size(); ++i)
      color[d.subject().name(bag[i])] = static_cast<int>(i) + 1;
    if (static_cast<int>(bag.size()) != d.subject().vertex_count())
      throw InternalError("single-node host does not cover the contracted subject");
  }
  for (auto it = merges.rbegin(); it != merges.rend(); ++it) color[it->first] = color.at(it->second);

  Coloring out;
  out.color_of.resize(input.subject().vertex_count());
  int max_color = 0;
  for (int v = 0; v < input.subject().vertex_count(); ++v) {
    auto it = color.find(input.subject().name(v));
    if (it == color.end()) throw InternalError("vertex lost during contraction");
    out.color_of[v] = it->second;
    max_color = std::max(max_color, it->second);
  }
  out.colors = max_color;
  if (!is_proper_coloring(input.subject(), out) || out.colors > width)
    throw InternalError("extracted coloring is not a proper width-bounded coloring");
  return out;
}

// ---------------------------------------------------------------------------
// laminar families to tree decompositions

// Builds a tree decomposition in which every member of a pairwise-laminar
// separation family is induced by a unique tree edge. Works by peeling a
// minimal side as a leaf and recursing on the other side; the result is
// re-checked against both requirements before it is returned.
inline Decomposition tree_from_laminar(const Graph& g, const std::vector<Separation>& family) {
  // normalize: sort sides, orient (smaller lexicographic side first), dedup
  auto normalize = [](Separation s) {
    std::sort(s.side_a.begin(), s.side_a.end());
    s.side_a.erase(std::unique(s.side_a.begin(), s.side_a.end()), s.side_a.end());
    std::sort(s.side_b.begin(), s.side_b.end());
    s.side_b.erase(std::unique(s.side_b.begin(), s.side_b.end()), s.side_b.end());
    if (s.side_b < s.side_a) std::swap(s.side_a, s.side_b);
    return s;
  };
  std::vector<Separation> fam;
  for (const auto& s : family) {
    Separation n = normalize(s);
    if (!is_separation(g, n))
      throw PreconditionError("input pair is not a separation of the subject");
    bool dup = false;
    for (const auto& f : fam)
      if (f.side_a == n.side_a && f.side_b == n.side_b) dup = true;
    if (!dup) fam.push_back(std::move(n));
  }
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j)
      if (!laminar(fam[i], fam[j]))
        throw PreconditionError("crossing pair detected in the separation family");

  std::sort(fam.begin(), fam.end(), [](const Separation& x, const Separation& y) {
    return x.side_a != y.side_a ? x.side_a < y.side_a : x.side_b < y.side_b;
  });

  // Mutable tree under construction. Each member is inserted by splitting
  // one node into an A-half and a B-half and distributing the incident
  // subtrees; a node admits the split when the fresh edge induces exactly
  // the member being inserted.
  struct Node {
    std::vector<int> bag;
    std::vector<int> adj;
  };
  std::vector<Node> nodes;
  {
    std::vector<int> universe(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) universe[v] = v;
    nodes.push_back({std::move(universe), {}});
  }

  auto subtree_union = [&](int from, int avoid) {
    std::vector<int> stack{from};
    std::vector<char> seen(nodes.size(), 0);
    seen[from] = 1;
    seen[avoid] = 1;
    detail::Bitset acc(g.vertex_count());
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (int v : nodes[t].bag) acc.set(v);
      for (int nb : nodes[t].adj)
        if (!seen[nb]) {
          seen[nb] = 1;
          stack.push_back(nb);
        }
    }
    return acc.to_vector();
  };

  for (const Separation& s : fam) {
    bool inserted = false;
    for (std::size_t t = 0; t < nodes.size() && !inserted; ++t) {
      std::vector<int> to_a_fits, to_b_fits;  // per incident edge
      bool feasible = true;
      std::vector<std::vector<int>> unions;
      for (int nb : nodes[t].adj) {
        std::vector<int> u = subtree_union(nb, static_cast<int>(t));
        bool fa = detail::sorted_subset(u, s.side_a);
        bool fb = detail::sorted_subset(u, s.side_b);
        if (!fa && !fb) {
          feasible = false;
          break;
        }
        to_a_fits.push_back(fa);
        to_b_fits.push_back(fb);
        unions.push_back(std::move(u));
      }
      if (!feasible) continue;
      for (bool prefer_a : {true, false}) {
        std::vector<char> to_a(nodes[t].adj.size(), 0);
        detail::Bitset ua(g.vertex_count()), ub(g.vertex_count());
        for (int v : detail::sorted_intersection(nodes[t].bag, s.side_a)) ua.set(v);
        for (int v : detail::sorted_intersection(nodes[t].bag, s.side_b)) ub.set(v);
        for (std::size_t e = 0; e < nodes[t].adj.size(); ++e) {
          bool pick_a = to_a_fits[e] && (prefer_a || !to_b_fits[e]);
          to_a[e] = pick_a;
          for (int v : unions[e]) (pick_a ? ua : ub).set(v);
        }
        if (ua.to_vector() != s.side_a || ub.to_vector() != s.side_b) continue;
        // commit: t keeps the A-half, a fresh node takes the B-half
        Node fresh;
        fresh.bag = detail::sorted_intersection(nodes[t].bag, s.side_b);
        std::vector<int> keep_adj;
        std::vector<int> old_adj = nodes[t].adj;
        int fresh_id = static_cast<int>(nodes.size());
        for (std::size_t e = 0; e < old_adj.size(); ++e) {
          if (to_a[e]) {
            keep_adj.push_back(old_adj[e]);
          } else {
            fresh.adj.push_back(old_adj[e]);
            for (int& back : nodes[old_adj[e]].adj)
              if (back == static_cast<int>(t)) back = fresh_id;
          }
        }
        nodes[t].bag = detail::sorted_intersection(nodes[t].bag, s.side_a);
        nodes[t].adj = keep_adj;
        nodes[t].adj.push_back(fresh_id);
        fresh.adj.push_back(static_cast<int>(t));
        nodes.push_back(std::move(fresh));
        inserted = true;
        break;
      }
    }
    if (!inserted)
      throw InternalError("no tree node admits the insertion of a laminar member");
  }

  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    names.push_back("t" + std::to_string(i));
    for (int nb : nodes[i].adj)
      if (nb > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), nb);
  }
  Graph host(std::move(names), edges);
  std::vector<std::vector<int>> bags;
  for (auto& nd : nodes) bags.push_back(std::move(nd.bag));
  Decomposition out(std::move(host), g, std::move(bags));

  // a-posteriori verification of both requirements
  ValidationReport rep = validate(out);
  if (!rep.ok() || !is_tree(out.host()))
    throw InternalError("laminar assembly is not a valid tree decomposition");
  std::vector<ThetaClass> classes = theta_classes(out.host(), false);
  std::vector<char> matched(fam.size(), 0);
  for (const auto& cls : classes) {
    InducedSeparation ind = induced_separation(out, cls);
    Separation got = normalize(ind.separation);
    bool found = false;
    for (std::size_t i = 0; i < fam.size(); ++i)
      if (fam[i].side_a == got.side_a && fam[i].side_b == got.side_b) {
        if (matched[i]) throw InternalError("separation induced by two distinct tree edges");
        matched[i] = 1;
        found = true;
      }
    if (!found && !fam.empty())
      throw InternalError("tree edge induces a separation outside the family");
  }
  for (std::size_t i = 0; i < fam.size(); ++i)
    if (!matched[i]) throw InternalError("family member not induced by any tree edge");
  return out;
}

}  // namespace mwkit
