#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mwkit/graph.hpp"
#include "mwkit/json_util.hpp"
#include "mwkit/median.hpp"
#include "mwkit/util.hpp"

namespace mwkit {

// A decomposition of a subject graph over a host graph: one bag (subject
// vertex set) per host node. Bags may be empty; the axioms constrain vertex
// supports, not bags. Structural well-formedness (bag entries are subject
// vertices, one bag per host node) is enforced at construction; the axioms
// are checked by validate().
class Decomposition {
 public:
  Decomposition(Graph host, Graph subject, std::vector<std::vector<int>> bags)
      : host_(std::move(host)), subject_(std::move(subject)), bags_(std::move(bags)) {
    if (static_cast<int>(bags_.size()) != host_.vertex_count())
      throw Error("decomposition needs exactly one bag per host node");
    for (auto& bag : bags_) {
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
      for (int v : bag)
        if (v < 0 || v >= subject_.vertex_count())
          throw Error("bag entry is not a subject vertex");
    }
  }

  static Decomposition from_named_bags(
      Graph host, Graph subject,
      const std::vector<std::pair<std::string, std::vector<std::string>>>& bags) {
    std::vector<std::vector<int>> by_index(host.vertex_count());
    std::vector<char> seen(host.vertex_count(), 0);
    for (const auto& [node, contents] : bags) {
      int h = host.index_of(node);
      if (h < 0) throw Error("bag names unknown host node '" + node + "'");
      if (seen[h]) throw Error("duplicate bag for host node '" + node + "'");
      seen[h] = 1;
      for (const auto& name : contents) {
        int v = subject.index_of(name);
        if (v < 0) throw Error("bag for '" + node + "' names unknown subject vertex '" + name + "'");
        by_index[h].push_back(v);
      }
    }
    return Decomposition(std::move(host), std::move(subject), std::move(by_index));
  }

  const Graph& host() const { return host_; }
  const Graph& subject() const { return subject_; }
  const std::vector<std::vector<int>>& bags() const { return bags_; }
  const std::vector<int>& bag(int host_node) const { return bags_[host_node]; }

  // the raw max-bag-size width
  int width() const {
    int w = 0;
    for (const auto& b : bags_) w = std::max(w, static_cast<int>(b.size()));
    return w;
  }

  // host nodes whose bag contains v, sorted
  std::vector<int> support(int v) const {
    std::vector<int> out;
    for (int h = 0; h < host_.vertex_count(); ++h)
      if (detail::sorted_contains(bags_[h], v)) out.push_back(h);
    return out;
  }

  bool operator==(const Decomposition& o) const {
    return host_ == o.host_ && subject_ == o.subject_ && bags_ == o.bags_;
  }

 private:
  Graph host_;
  Graph subject_;
  std::vector<std::vector<int>> bags_;
};

// Single-node host holding the whole subject.
inline Decomposition trivial_decomposition(const Graph& subject) {
  std::vector<int> all(subject.vertex_count());
  for (int i = 0; i < subject.vertex_count(); ++i) all[i] = i;
  return Decomposition(Graph({"0"}, {}), subject, {all});
}

inline bool is_tree(const Graph& g) {
  return g.connected() && g.edge_count() == g.vertex_count() - 1;
}

// ---------------------------------------------------------------------------
// axioms

struct Violation {
  std::string axiom;   // "M1" or "M2"
  std::string witness; // replayable description
};

struct ValidationReport {
  bool m1_ok = true;
  bool m2_ok = true;
  std::vector<Violation> violations;
  int width = 0;
  bool host_is_median = false;
  std::optional<int> host_tree_dimension;  // absent when host is not median
  bool ok() const { return m1_ok && m2_ok; }
};

namespace detail {

// Convexity of a support set in the host. On small hosts this is the
// definitional check; on large verified-median hosts it switches to the
// gate criterion, which is equivalent there and much cheaper.
inline bool support_convex(const Graph& host, const std::vector<int>& set,
                           bool host_median) {
  if (host.vertex_count() <= 64 || !host_median) return is_convex(host, set);
  return is_convex_in_median(host, set);
}

}  // namespace detail

// Checks the two axioms: every subject edge inside some bag, every subject
// vertex with nonempty convex support. Also reports host medianness and
// host tree dimension.
inline ValidationReport validate(const Decomposition& d) {
  ValidationReport rep;
  const Graph& host = d.host();
  const Graph& subject = d.subject();
  const int hn = host.vertex_count();

  MedianReport med = check_median(host);
  rep.host_is_median = med.median;
  rep.width = d.width();

  std::vector<detail::Bitset> supports(subject.vertex_count(), detail::Bitset(hn));
  for (int h = 0; h < hn; ++h)
    for (int v : d.bag(h)) supports[v].set(h);

  for (auto [u, v] : subject.edges()) {
    if (!supports[u].intersects(supports[v])) {
      rep.m1_ok = false;
      rep.violations.push_back(
          {"M1", "edge " + subject.name(u) + "-" + subject.name(v) + " lies in no bag"});
    }
  }
  for (int v = 0; v < subject.vertex_count(); ++v) {
    std::vector<int> sup = supports[v].to_vector();
    if (sup.empty()) {
      rep.m2_ok = false;
      rep.violations.push_back({"M2", "vertex " + subject.name(v) + " has empty support"});
      continue;
    }
    if (!detail::support_convex(host, sup, med.median)) {
      rep.m2_ok = false;
      rep.violations.push_back(
          {"M2", "support of vertex " + subject.name(v) + " is not convex in the host"});
    }
  }

  if (med.median)
    rep.host_tree_dimension = tree_dimension(host, theta_classes(host, false));
  return rep;
}

// ---------------------------------------------------------------------------
// side unions of a host Theta class

// Bag unions across the halfspaces of a host Theta class: "all" unions over
// whole sides, "boundary" unions over the cut-incident nodes only. These
// are subject vertex sets.
struct SideBagUnions {
  std::vector<int> all_a, all_b;           // unions over side_a / side_b
  std::vector<int> boundary_a, boundary_b; // unions over the two boundaries
};

inline void require_host_class(const Decomposition& d, const ThetaClass& c) {
  const Graph& host = d.host();
  const int n = host.vertex_count();
  bool ok = c.rep.first >= 0 && c.rep.second >= 0 && c.rep.first < n && c.rep.second < n &&
            host.has_edge(c.rep.first, c.rep.second) &&
            static_cast<int>(c.side_a.size() + c.side_b.size()) == n;
  if (!ok) throw PreconditionError("theta class does not belong to this host");
}

inline SideBagUnions bag_side_unions(const Decomposition& d, const ThetaClass& c) {
  require_host_class(d, c);
  SideBagUnions out;
  auto accumulate = [&](const std::vector<int>& nodes, std::vector<int>& into) {
    detail::Bitset acc(d.subject().vertex_count());
    for (int h : nodes)
      for (int v : d.bag(h)) acc.set(v);
    into = acc.to_vector();
  };
  accumulate(c.side_a, out.all_a);
  accumulate(c.side_b, out.all_b);
  accumulate(class_boundary(c, true), out.boundary_a);
  accumulate(class_boundary(c, false), out.boundary_b);
  return out;
}

// The separation of the subject induced by a host Theta class, with the
// certificate that the side overlap is confined to the boundary overlap.
struct InducedSeparation {
  Separation separation;             // (all_a, all_b)
  std::vector<int> overlap;          // all_a cap all_b
  std::vector<int> boundary_overlap; // boundary_a cap boundary_b
};

inline InducedSeparation induced_separation(const Decomposition& d, const ThetaClass& c) {
  SideBagUnions u = bag_side_unions(d, c);
  InducedSeparation out;
  out.separation = Separation{u.all_a, u.all_b};
  out.overlap = detail::sorted_intersection(u.all_a, u.all_b);
  out.boundary_overlap = detail::sorted_intersection(u.boundary_a, u.boundary_b);
  if (!is_separation(d.subject(), out.separation))
    throw InternalError("theta class of a valid decomposition did not induce a separation");
  if (!detail::sorted_subset(out.overlap, out.boundary_overlap))
    throw InternalError("separation overlap escapes the boundary bags");
  return out;
}

// ---------------------------------------------------------------------------
// smoothness

struct SmoothClassReport {
  int class_index = -1;
  bool ok = false;
  std::string detail;
  std::vector<int> surplus_a, surplus_b;  // boundary-union differences
};

struct SmoothReport {
  bool smooth = true;
  std::vector<SmoothClassReport> classes;
};

// Theta-smoothness: per class, both boundary-union differences are single
// vertices whose supports union to a convex host set.
inline SmoothReport check_theta_smooth(const Decomposition& d) {
  MedianReport med = check_median(d.host());
  if (!med.median)
    throw PreconditionError("theta-smoothness requires a median host (" + med.reason + ")");
  std::vector<ThetaClass> classes = theta_classes(d.host(), false);
  SmoothReport rep;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    SideBagUnions u = bag_side_unions(d, classes[i]);
    SmoothClassReport cr;
    cr.class_index = static_cast<int>(i);
    cr.surplus_a = detail::sorted_difference(u.boundary_a, u.boundary_b);
    cr.surplus_b = detail::sorted_difference(u.boundary_b, u.boundary_a);
    if (cr.surplus_a.size() != 1 || cr.surplus_b.size() != 1) {
      cr.detail = "boundary differences have sizes " + std::to_string(cr.surplus_a.size()) +
                  "/" + std::to_string(cr.surplus_b.size()) + ", expected 1/1";
    } else {
      std::vector<int> joint = detail::sorted_union(d.support(cr.surplus_a[0]),
                                                    d.support(cr.surplus_b[0]));
      if (!detail::support_convex(d.host(), joint, true))
        cr.detail = "joint support of " + d.subject().name(cr.surplus_a[0]) + " and " +
                    d.subject().name(cr.surplus_b[0]) + " is not convex";
      else
        cr.ok = true;
    }
    if (!cr.ok) rep.smooth = false;
    rep.classes.push_back(std::move(cr));
  }
  return rep;
}

struct WeakSmoothClassReport {
  int class_index = -1;
  bool ok = false;
  std::string detail;
  std::vector<std::pair<int, int>> matching;  // subject vertex pairs (smaller side first)
};

struct WeakSmoothReport {
  bool weakly_smooth = true;
  std::vector<WeakSmoothClassReport> classes;
};

// Weak Theta-smoothness: per class, both boundary differences are nonempty
// and the smaller one injects into the larger by admissible pairs. A pair
// is admissible when the joint support is convex and membership of the two
// vertices is synchronized across every cut edge.
inline WeakSmoothReport check_weak_theta_smooth(const Decomposition& d) {
  MedianReport med = check_median(d.host());
  if (!med.median)
    throw PreconditionError("weak theta-smoothness requires a median host (" + med.reason + ")");
  std::vector<ThetaClass> classes = theta_classes(d.host(), false);
  WeakSmoothReport rep;

  std::vector<detail::Bitset> in_bag;
  for (int h = 0; h < d.host().vertex_count(); ++h)
    in_bag.push_back(detail::Bitset::from_vector(d.subject().vertex_count(), d.bag(h)));

  for (std::size_t i = 0; i < classes.size(); ++i) {
    const ThetaClass& c = classes[i];
    SideBagUnions u = bag_side_unions(d, c);
    WeakSmoothClassReport cr;
    cr.class_index = static_cast<int>(i);
    std::vector<int> diff_a = detail::sorted_difference(u.boundary_a, u.boundary_b);
    std::vector<int> diff_b = detail::sorted_difference(u.boundary_b, u.boundary_a);
    if (diff_a.empty() || diff_b.empty()) {
      cr.detail = "a boundary difference is empty";
      rep.weakly_smooth = false;
      rep.classes.push_back(std::move(cr));
      continue;
    }
    bool a_small = diff_a.size() <= diff_b.size();
    const std::vector<int>& small = a_small ? diff_a : diff_b;
    const std::vector<int>& large = a_small ? diff_b : diff_a;

    // synchronization across the cut edges, oriented small side -> large side
    detail::Bitset in_small_side = detail::Bitset::from_vector(
        d.host().vertex_count(), a_small ? c.side_a : c.side_b);
    auto admissible = [&](int v, int w) {
      std::vector<int> joint = detail::sorted_union(d.support(v), d.support(w));
      if (!detail::support_convex(d.host(), joint, true)) return false;
      for (const auto& e : c.edges) {
        int x = in_small_side.test(e.first) ? e.first : e.second;
        int y = in_small_side.test(e.first) ? e.second : e.first;
        if (in_bag[x].test(v) != in_bag[y].test(w)) return false;
      }
      return true;
    };

    // bipartite matching saturating the smaller side
    std::vector<std::vector<int>> adm(small.size());
    for (std::size_t s = 0; s < small.size(); ++s)
      for (std::size_t l = 0; l < large.size(); ++l)
        if (admissible(small[s], large[l])) adm[s].push_back(static_cast<int>(l));
    std::vector<int> match_large(large.size(), -1);
    std::vector<int> match_small(small.size(), -1);
    auto augment = [&](auto&& self, int s, std::vector<char>& used) -> bool {
      for (int l : adm[s]) {
        if (used[l]) continue;
        used[l] = 1;
        if (match_large[l] < 0 || self(self, match_large[l], used)) {
          match_large[l] = s;
          match_small[s] = l;
          return true;
        }
      }
      return false;
    };
    bool saturated = true;
    for (std::size_t s = 0; s < small.size() && saturated; ++s) {
      std::vector<char> used(large.size(), 0);
      if (!augment(augment, static_cast<int>(s), used)) saturated = false;
    }
    if (!saturated) {
      cr.detail = "no admissible matching saturates the smaller boundary difference";
      rep.weakly_smooth = false;
    } else {
      cr.ok = true;
      for (std::size_t s = 0; s < small.size(); ++s)
        cr.matching.emplace_back(small[s], large[match_small[s]]);
    }
    rep.classes.push_back(std::move(cr));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// host-restricted checks

struct IMedianCheck {
  bool ok = false;
  bool host_is_median = false;
  std::optional<int> dimension;
};

// Host must be median with tree dimension at most i.
inline IMedianCheck check_i_median(const Decomposition& d, int i) {
  IMedianCheck r;
  MedianReport med = check_median(d.host());
  r.host_is_median = med.median;
  if (!med.median) return r;
  r.dimension = tree_dimension(d.host(), theta_classes(d.host(), false));
  r.ok = *r.dimension <= i;
  return r;
}

struct GatedCheckReport {
  bool ok = true;
  std::vector<Violation> violations;  // axiom "H1" or "H2"
};

// Generic host variant: edges covered, supports nonempty and gated in the
// host (every host vertex has a gate into the support).
inline GatedCheckReport check_gated_decomposition(const Decomposition& d) {
  if (!d.host().connected())
    throw PreconditionError("gated decomposition check requires a connected host");
  GatedCheckReport rep;
  const Graph& subject = d.subject();
  const int hn = d.host().vertex_count();
  std::vector<detail::Bitset> supports(subject.vertex_count(), detail::Bitset(hn));
  for (int h = 0; h < hn; ++h)
    for (int v : d.bag(h)) supports[v].set(h);
  for (auto [u, v] : subject.edges())
    if (!supports[u].intersects(supports[v])) {
      rep.ok = false;
      rep.violations.push_back(
          {"H1", "edge " + subject.name(u) + "-" + subject.name(v) + " lies in no bag"});
    }
  for (int v = 0; v < subject.vertex_count(); ++v) {
    std::vector<int> sup = supports[v].to_vector();
    if (sup.empty()) {
      rep.ok = false;
      rep.violations.push_back({"H2", "vertex " + subject.name(v) + " has empty support"});
      continue;
    }
    for (int h = 0; h < hn; ++h)
      if (!gate(d.host(), sup, h)) {
        rep.ok = false;
        rep.violations.push_back({"H2", "support of vertex " + subject.name(v) +
                                            " has no gate for host node " + d.host().name(h)});
        break;
      }
  }
  return rep;
}

// ---------------------------------------------------------------------------

// Same host, bags intersected with the subgraph's vertices.
inline Decomposition restrict_decomposition(const Decomposition& d, const Graph& subgraph) {
  const Graph& subject = d.subject();
  std::vector<int> to_old(subgraph.vertex_count());
  for (int v = 0; v < subgraph.vertex_count(); ++v) {
    int old = subject.index_of(subgraph.name(v));
    if (old < 0)
      throw PreconditionError("restriction target names vertex '" + subgraph.name(v) +
                              "' outside the subject");
    to_old[v] = old;
  }
  for (auto [a, b] : subgraph.edges())
    if (!subject.has_edge(to_old[a], to_old[b]))
      throw PreconditionError("restriction target has edge " + subgraph.name(a) + "-" +
                              subgraph.name(b) + " outside the subject");
  std::vector<int> new_of(subject.vertex_count(), -1);
  for (int v = 0; v < subgraph.vertex_count(); ++v) new_of[to_old[v]] = v;
  std::vector<std::vector<int>> bags(d.host().vertex_count());
  for (int h = 0; h < d.host().vertex_count(); ++h)
    for (int v : d.bag(h))
      if (new_of[v] >= 0) bags[h].push_back(new_of[v]);
  return Decomposition(d.host(), subgraph, std::move(bags));
}

// ---------------------------------------------------------------------------
// decomposition document ("mwkit-decomposition-v1")

inline std::string serialize_decomposition(const Decomposition& d) {
  detail::ordered_json j;
  j["format"] = "mwkit-decomposition-v1";
  j["subject"] = detail::graph_to_json(d.subject());
  j["host"] = detail::graph_to_json(d.host());
  detail::ordered_json bags = detail::ordered_json::object();
  for (int h = 0; h < d.host().vertex_count(); ++h) {
    auto arr = detail::ordered_json::array();
    for (int v : d.bag(h)) arr.push_back(d.subject().name(v));
    bags[d.host().name(h)] = arr;
  }
  j["bags"] = bags;
  return detail::dump_document(j);
}

inline Decomposition parse_decomposition(const std::string& text) {
  auto j = detail::parse_json_document(text, "mwkit-decomposition-v1");
  if (!j.contains("subject") || !j.contains("host"))
    throw ParseError("decomposition document needs subject and host");
  Graph subject = detail::graph_from_json(j.at("subject"), "subject");
  Graph host = detail::graph_from_json(j.at("host"), "host");
  std::vector<std::pair<std::string, std::vector<std::string>>> bags;
  if (j.contains("bags")) {
    if (!j.at("bags").is_object()) throw ParseError("bags must be an object");
    for (const auto& [node, arr] : j.at("bags").items()) {
      if (!arr.is_array()) throw ParseError("bag for '" + node + "' must be an array");
      std::vector<std::string> contents;
      for (const auto& v : arr) contents.push_back(v.get<std::string>());
      bags.emplace_back(node, std::move(contents));
    }
  }
  try {
    return Decomposition::from_named_bags(std::move(host), std::move(subject), bags);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace mwkit
