#include <catch2/catch_amalgamated.hpp>

#include "mwkit/mwkit.hpp"
#include "support/test_support.hpp"

using namespace mwkit;
using testsup::census_graph;
using testsup::connected_census;

namespace {

std::set<std::set<std::pair<int, int>>> as_partition(
    const std::vector<std::vector<std::pair<int, int>>>& groups) {
  std::set<std::set<std::pair<int, int>>> out;
  for (const auto& g : groups) out.insert(std::set<std::pair<int, int>>(g.begin(), g.end()));
  return out;
}

std::set<std::set<std::pair<int, int>>> as_partition(const std::vector<ThetaClass>& classes) {
  std::set<std::set<std::pair<int, int>>> out;
  for (const auto& c : classes)
    out.insert(std::set<std::pair<int, int>>(c.edges.begin(), c.edges.end()));
  return out;
}

bool sides_connected(const Graph& g, const std::vector<int>& side) {
  if (side.empty()) return false;
  std::vector<char> in(g.vertex_count(), 0), seen(g.vertex_count(), 0);
  for (int v : side) in[v] = 1;
  std::vector<int> stack{side[0]};
  seen[side[0]] = 1;
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
  return count == static_cast<int>(side.size());
}

}  // namespace

TEST_CASE("median recognition") {
  SECTION("trees are median") {
    for (unsigned seed = 0; seed < 10; ++seed) REQUIRE(is_median(make_random_tree(8, seed)));
  }
  SECTION("C6 is not median") { REQUIRE_FALSE(is_median(make_cycle(6))); }
  SECTION("K_{2,3} is not median, witnessed from the large part") {
    Graph k23 = make_complete_multipartite({2, 3});
    MedianReport r = check_median(k23);
    REQUIRE_FALSE(r.median);
    REQUIRE(r.witness.has_value());
    auto [u, v, w] = *r.witness;
    REQUIRE(median_of(k23, u, v, w).kind != MedianOutcome::Kind::Unique);
  }
  SECTION("disconnected graphs are reported as such") {
    Graph g = parse_graph("a b\nv c\n");
    MedianReport r = check_median(g);
    REQUIRE_FALSE(r.median);
    REQUIRE(r.reason == "disconnected");
  }
  SECTION("hypercubes and grids are median") {
    REQUIRE(is_median(make_hypercube(3)));
    REQUIRE(is_median(make_grid(3, 3)));
  }
}

TEST_CASE("the two recognizers agree") {
  auto structural_matches = [](const Graph& g) {
    MedianReport def = mwkit::detail::check_median_definitional(g);
    MedianReport str = mwkit::detail::check_median_structural(g);
    REQUIRE(def.median == str.median);
    if (str.witness) {
      auto [u, v, w] = *str.witness;
      REQUIRE(median_of(g, u, v, w).kind != MedianOutcome::Kind::Unique);
    }
  };
  SECTION("on the exhaustive small census") {
    for (int n = 1; n <= 5; ++n)
      for (std::uint32_t mask : connected_census(n)) structural_matches(census_graph(n, mask));
  }
  SECTION("on random graphs") {
    for (unsigned seed = 0; seed < 40; ++seed)
      structural_matches(testsup::random_connected_graph(8, seed));
  }
  SECTION("on random median graphs and near-median perturbations") {
    for (unsigned seed = 0; seed < 30; ++seed) {
      Graph m = random_median_graph(6, seed);
      structural_matches(m);
      if (m.edge_count() >= 1) {
        auto edges = m.edges();
        edges.erase(edges.begin() + seed % edges.size());
        Graph broken(m.names(), edges);
        if (broken.connected()) structural_matches(broken);
      }
    }
  }
  SECTION("on named troublemakers") {
    structural_matches(make_cycle(6));
    structural_matches(make_complete_multipartite({2, 3}));
    Graph q3 = make_hypercube(3);
    std::vector<int> keep;
    for (int v = 1; v < q3.vertex_count(); ++v) keep.push_back(v);
    structural_matches(induced_subgraph(q3, keep));  // vertex-deleted cube
  }
}

TEST_CASE("theta classes") {
  SECTION("tree: one singleton class per edge") {
    Graph t = make_random_tree(7, 3);
    auto classes = theta_classes(t);
    REQUIRE(classes.size() == 6);
    for (const auto& c : classes) REQUIRE(c.edges.size() == 1);
  }
  SECTION("C4: two classes of two opposite edges") {
    auto classes = theta_classes(make_cycle(4));
    REQUIRE(classes.size() == 2);
    for (const auto& c : classes) REQUIRE(c.edges.size() == 2);
  }
  SECTION("Q3: three classes of four edges") {
    auto classes = theta_classes(make_hypercube(3));
    REQUIRE(classes.size() == 3);
    for (const auto& c : classes) REQUIRE(c.edges.size() == 4);
  }
  SECTION("non-median input is rejected") {
    REQUIRE_THROWS_AS(theta_classes(make_cycle(6)), PreconditionError);
  }
  SECTION("partition, matching, minimal cut, and relation agreement") {
    for (unsigned seed = 0; seed < 25; ++seed) {
      Graph m = random_median_graph(7, seed + 10);
      auto classes = theta_classes(m);
      std::size_t total = 0;
      for (const auto& c : classes) total += c.edges.size();
      REQUIRE(total == static_cast<std::size_t>(m.edge_count()));
      REQUIRE(as_partition(classes) == as_partition(testsup::dw_relation_classes(m)));
      for (const auto& c : classes) {
        std::set<int> touched;
        for (auto [a, b] : c.edges) {
          REQUIRE(touched.insert(a).second);
          REQUIRE(touched.insert(b).second);
        }
        REQUIRE(sides_connected(m, c.side_a));
        REQUIRE(sides_connected(m, c.side_b));
        mwkit::detail::Bitset in_a =
            mwkit::detail::Bitset::from_vector(m.vertex_count(), c.side_a);
        std::vector<std::pair<int, int>> cross;
        for (auto e : m.edges())
          if (in_a.test(e.first) != in_a.test(e.second)) cross.push_back(e);
        REQUIRE(cross == c.edges);
        REQUIRE(c.side_a.size() + c.side_b.size() ==
                static_cast<std::size_t>(m.vertex_count()));
        REQUIRE(is_convex(m, c.side_a));
        REQUIRE(is_convex(m, c.side_b));
      }
    }
  }
}

TEST_CASE("peripheral sets") {
  SECTION("tree: a side is peripheral exactly when it is a leaf") {
    Graph t = make_random_tree(8, 9);
    auto classes = theta_classes(t);
    auto per = peripheral_sets(t, classes);
    std::set<std::vector<int>> got;
    for (const auto& p : per) got.insert(p.vertices);
    std::set<std::vector<int>> expected;
    for (int v = 0; v < t.vertex_count(); ++v)
      if (t.neighbors(v).size() == 1) expected.insert({v});
    REQUIRE(got == expected);
  }
  SECTION("all four sides of the square are peripheral") {
    REQUIRE(peripheral_sets(make_hypercube(2)).size() == 4);
  }
  SECTION("P3: only the two leaf sides") {
    auto per = peripheral_sets(make_path(3));
    REQUIRE(per.size() == 2);
    for (const auto& p : per) REQUIRE(p.vertices.size() == 1);
  }
}

TEST_CASE("crossing graph and tree dimension") {
  SECTION("tree: edgeless crossing graph, dimension one") {
    Graph t = make_random_tree(7, 21);
    Graph cg = crossing_graph(t);
    REQUIRE(cg.edge_count() == 0);
    REQUIRE(tree_dimension(t) == 1);
  }
  SECTION("hypercube: complete crossing graph, dimension k") {
    for (int k = 1; k <= 4; ++k) {
      Graph q = make_hypercube(k);
      Graph cg = crossing_graph(q);
      REQUIRE(cg.vertex_count() == k);
      REQUIRE(cg.edge_count() == k * (k - 1) / 2);
      REQUIRE(tree_dimension(q) == k);
    }
  }
  SECTION("grid: complete bipartite crossing pattern, dimension two") {
    Graph g = make_grid(3, 4);
    Graph cg = crossing_graph(g);
    REQUIRE(cg.vertex_count() == 5);  // 2 row cuts + 3 column cuts
    REQUIRE(cg.edge_count() == 6);    // rows cross columns only
    REQUIRE(chromatic_number(cg).colors == 2);
    REQUIRE(tree_dimension(g) == 2);
  }
}

TEST_CASE("tree product embedding") {
  SECTION("a tree embeds as itself") {
    Graph t = make_random_tree(7, 33);
    TreeProductEmbedding e = embed_tree_product(t);
    REQUIRE(e.factors.size() == 1);
    REQUIRE(e.factors[0] == t);
    for (int v = 0; v < t.vertex_count(); ++v) REQUIRE(e.coords[v][0] == v);
  }
  SECTION("the square splits into two single-edge factors") {
    TreeProductEmbedding e = embed_tree_product(make_hypercube(2));
    REQUIRE(e.factors.size() == 2);
    for (const auto& f : e.factors) {
      REQUIRE(f.vertex_count() == 2);
      REQUIRE(f.edge_count() == 1);
    }
  }
  SECTION("random median graphs: dimension, isometry, economy, class preimages") {
    for (unsigned seed = 0; seed < 30; ++seed) {
      Graph m = random_median_graph(8, seed + 77);
      auto classes = theta_classes(m);
      TreeProductEmbedding e = embed_tree_product(m);
      REQUIRE(static_cast<int>(e.factors.size()) == tree_dimension(m, classes));
      for (int u = 0; u < m.vertex_count(); ++u)
        for (int v = u + 1; v < m.vertex_count(); ++v) {
          int total = 0;
          for (std::size_t j = 0; j < e.factors.size(); ++j)
            total += e.factors[j].dist(e.coords[u][j], e.coords[v][j]);
          REQUIRE(total == m.dist(u, v));
        }
      for (std::size_t j = 0; j < e.factors.size(); ++j) {
        const Graph& f = e.factors[j];
        std::vector<int> hit(f.vertex_count(), 0);
        for (int v = 0; v < m.vertex_count(); ++v) hit[e.coords[v][j]] = 1;
        for (int t = 0; t < f.vertex_count(); ++t) REQUIRE(hit[t] == 1);
        for (std::size_t a = 0; a < e.directions[j].size(); ++a)
          for (std::size_t b = a + 1; b < e.directions[j].size(); ++b)
            REQUIRE_FALSE(
                classes_cross(m, classes[e.directions[j][a]], classes[e.directions[j][b]]));
        for (auto [x, y] : f.edges()) {
          std::set<std::pair<int, int>> preimage;
          for (auto ed : m.edges()) {
            int cx = e.coords[ed.first][j], cy = e.coords[ed.second][j];
            if ((cx == x && cy == y) || (cx == y && cy == x)) preimage.insert(ed);
          }
          bool found = false;
          for (int ci : e.directions[j]) {
            std::set<std::pair<int, int>> cls(classes[ci].edges.begin(),
                                              classes[ci].edges.end());
            if (cls == preimage) found = true;
          }
          REQUIRE(found);
        }
        for (int ci : e.directions[j]) {
          auto fiber_of = [&](const std::vector<int>& side) {
            std::set<int> fibers;
            for (int v : side) fibers.insert(e.coords[v][j]);
            return fibers;
          };
          bool a_in_one = fiber_of(class_boundary(classes[ci], true)).size() == 1;
          bool b_in_one = fiber_of(class_boundary(classes[ci], false)).size() == 1;
          REQUIRE((a_in_one && b_in_one));
        }
      }
    }
  }
}

TEST_CASE("cartesian products") {
  SECTION("K2 x K2 is a square") {
    Graph k2({"0", "1"}, {{0, 1}});
    Graph q = cartesian_product(k2, k2);
    REQUIRE(q.vertex_count() == 4);
    REQUIRE(q.edge_count() == 4);
    for (int v = 0; v < 4; ++v) REQUIRE(q.neighbors(v).size() == 2);
  }
  SECTION("P2 x P3 is the 2x3 grid") {
    Graph g = cartesian_product(make_path(2), make_path(3));
    REQUIRE(g.vertex_count() == 6);
    REQUIRE(g.edge_count() == 7);
  }
  SECTION("products of random trees are median") {
    for (unsigned seed = 0; seed < 8; ++seed) {
      Graph t1 = make_random_tree(4, seed);
      Graph t2 = make_random_tree(5, seed + 50);
      REQUIRE(is_median(cartesian_product(t1, t2)));
    }
  }
}

TEST_CASE("peripheral expansion") {
  SECTION("expanding K1 over everything gives K2") {
    Graph k1({"0"}, {});
    Graph k2 = peripheral_expansion(k1, {0});
    REQUIRE(k2.vertex_count() == 2);
    REQUIRE(k2.edge_count() == 1);
  }
  SECTION("expanding K2 over everything gives a square") {
    Graph k2({"0", "1"}, {{0, 1}});
    Graph q = peripheral_expansion(k2, {0, 1});
    REQUIRE(q.vertex_count() == 4);
    REQUIRE(q.edge_count() == 4);
    REQUIRE(is_median(q));
  }
  SECTION("expansion stays median and adds exactly one theta class") {
    for (unsigned seed = 0; seed < 20; ++seed) {
      Graph m = random_median_graph(6, seed + 5);
      mwkit::detail::Rng rng(seed);
      auto s = testsup::random_convex_set(m, rng);
      Graph bigger = peripheral_expansion(m, s);
      REQUIRE(is_median(bigger));
      REQUIRE(theta_classes(bigger).size() == theta_classes(m).size() + 1);
    }
  }
  SECTION("non-convex sets are rejected") {
    Graph c4 = make_hypercube(2);
    int a = c4.require_index("0|0"), b = c4.require_index("1|1");
    REQUIRE_THROWS_AS(peripheral_expansion(c4, {a, b}), PreconditionError);
  }
}

TEST_CASE("random median graphs") {
  SECTION("zero steps is a single vertex") {
    REQUIRE(random_median_graph(0, 7).vertex_count() == 1);
  }
  SECTION("one step doubles the single vertex") {
    Graph g = random_median_graph(1, 7);
    REQUIRE(g.vertex_count() == 2);
    REQUIRE(g.edge_count() == 1);
  }
  SECTION("every seed yields a median graph") {
    for (unsigned seed = 0; seed < 25; ++seed)
      REQUIRE(is_median(random_median_graph(10, seed)));
  }
}

TEST_CASE("simplex graph") {
  SECTION("K1 becomes an edge") {
    Graph s = simplex_graph(Graph({"a"}, {}));
    REQUIRE(s.vertex_count() == 2);
    REQUIRE(s.edge_count() == 1);
  }
  SECTION("K2 becomes a square with the expected node names") {
    Graph s = simplex_graph(parse_graph("a b\n"));
    REQUIRE(s.vertex_count() == 4);
    REQUIRE(s.edge_count() == 4);
    REQUIRE(s.index_of("{}") >= 0);
    REQUIRE(s.index_of("{a}") >= 0);
    REQUIRE(s.index_of("{b}") >= 0);
    REQUIRE(s.index_of("{a,b}") >= 0);
    REQUIRE(s.has_edge(s.index_of("{}"), s.index_of("{a}")));
    REQUIRE(s.has_edge(s.index_of("{a}"), s.index_of("{a,b}")));
    REQUIRE_FALSE(s.has_edge(s.index_of("{}"), s.index_of("{a,b}")));
  }
  SECTION("C5 has 11 cliques and a median simplex graph") {
    Graph s = simplex_graph(make_cycle(5));
    REQUIRE(s.vertex_count() == 11);
    REQUIRE(is_median(s));
  }
  SECTION("simplex graphs of random graphs are median") {
    for (unsigned seed = 0; seed < 10; ++seed)
      REQUIRE(is_median(simplex_graph(testsup::random_gnp(6, 40, seed + 3))));
  }
  SECTION("budget overflow raises") {
    REQUIRE_THROWS_AS(simplex_graph(make_complete(13), 4096), BoundError);
  }
}

TEST_CASE("gates") {
  SECTION("members are their own gates") {
    Graph g = testsup::random_connected_graph(7, 2);
    std::vector<int> k{1, 3, 4};
    for (int v : k) REQUIRE(gate(g, k, v) == v);
  }
  SECTION("convex sets of median graphs are gated") {
    for (unsigned seed = 0; seed < 20; ++seed) {
      Graph m = random_median_graph(7, seed);
      mwkit::detail::Rng rng(seed);
      auto s = testsup::random_convex_set(m, rng);
      REQUIRE(is_gated(m, s));
    }
  }
  SECTION("C6 antipodal pair has no gate from the midpoints") {
    Graph c6 = make_cycle(6);
    std::vector<int> k{0, 3};
    REQUIRE_FALSE(gate(c6, k, 1).has_value());
    REQUIRE_FALSE(is_gated(c6, k));
  }
  SECTION("gated sets are convex; intersections of gated sets are gated") {
    for (unsigned seed = 0; seed < 6; ++seed) {
      Graph g = testsup::random_connected_graph(6, seed + 900);
      std::vector<std::vector<int>> gated_sets;
      for (std::uint32_t mask = 1; mask < (1u << 6); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < 6; ++v)
          if (mask >> v & 1) s.push_back(v);
        if (is_gated(g, s)) gated_sets.push_back(s);
      }
      for (const auto& s : gated_sets) REQUIRE(is_convex(g, s));
      for (std::size_t i = 0; i < gated_sets.size(); ++i)
        for (std::size_t j = i + 1; j < gated_sets.size(); ++j) {
          auto inter = mwkit::detail::sorted_intersection(gated_sets[i], gated_sets[j]);
          if (!inter.empty()) REQUIRE(is_gated(g, inter));
        }
    }
  }
  SECTION("gate-based convexity agrees with definitional convexity on median graphs") {
    for (unsigned seed = 0; seed < 15; ++seed) {
      Graph m = random_median_graph(7, seed + 200);
      mwkit::detail::Rng rng(seed);
      for (int trial = 0; trial < 8; ++trial) {
        std::vector<int> s;
        for (int v = 0; v < m.vertex_count(); ++v)
          if (rng.below(3) == 0) s.push_back(v);
        REQUIRE(is_convex_in_median(m, s) == is_convex(m, s));
      }
    }
  }
}

TEST_CASE("median graph structure lemmas") {
  SECTION("Helly property of convex sets") {
    int families = 0;
    for (unsigned seed = 0; families < 60 && seed < 4000; ++seed) {
      Graph m = random_median_graph(7, seed % 37);
      mwkit::detail::Rng rng(seed);
      std::vector<std::vector<int>> sets;
      int want = 2 + rng.below(3);
      for (int i = 0; i < want; ++i) sets.push_back(testsup::random_convex_set(m, rng));
      bool pairwise = true;
      for (std::size_t i = 0; i < sets.size() && pairwise; ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
          if (mwkit::detail::sorted_intersection(sets[i], sets[j]).empty()) {
            pairwise = false;
            break;
          }
      if (!pairwise) continue;
      ++families;
      std::vector<int> total = sets[0];
      for (const auto& s : sets) total = mwkit::detail::sorted_intersection(total, s);
      REQUIRE_FALSE(total.empty());
    }
    REQUIRE(families == 60);
  }
  SECTION("every convex set is the intersection of its enclosing halfspaces") {
    for (unsigned seed = 0; seed < 20; ++seed) {
      Graph m = random_median_graph(7, seed + 400);
      mwkit::detail::Rng rng(seed);
      auto s = testsup::random_convex_set(m, rng);
      auto classes = theta_classes(m);
      std::vector<int> acc(m.vertex_count());
      for (int v = 0; v < m.vertex_count(); ++v) acc[v] = v;
      for (const auto& c : classes) {
        if (mwkit::detail::sorted_subset(s, c.side_a))
          acc = mwkit::detail::sorted_intersection(acc, c.side_a);
        if (mwkit::detail::sorted_subset(s, c.side_b))
          acc = mwkit::detail::sorted_intersection(acc, c.side_b);
      }
      REQUIRE(acc == s);
    }
  }
  SECTION("a set meeting every peripheral set spans the whole graph by hull") {
    for (unsigned seed = 0; seed < 15; ++seed) {
      Graph m = random_median_graph(6, seed + 800);
      auto per = peripheral_sets(m);
      if (per.empty()) continue;
      std::vector<int> s;
      for (const auto& p : per)
        s.push_back(p.vertices[static_cast<int>(seed) % p.vertices.size()]);
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      std::vector<int> everything(m.vertex_count());
      for (int v = 0; v < m.vertex_count(); ++v) everything[v] = v;
      REQUIRE(convex_hull(m, s) == everything);
    }
  }
}

TEST_CASE("embedding document round trip") {
  for (unsigned seed = 0; seed < 6; ++seed) {
    Graph m = random_median_graph(7, seed + 60);
    TreeProductEmbedding e = embed_tree_product(m);
    std::string doc = serialize_embedding(m, e);
    EmbeddingDocument parsed = parse_embedding(doc);
    REQUIRE(parsed.factors.size() == e.factors.size());
    REQUIRE(serialize_embedding(parsed) == doc);
    REQUIRE(parsed.vertices == m.names());
  }
}
