#pragma once

#include <string>
#include <vector>

#include "mwkit/decomp.hpp"
#include "mwkit/graph.hpp"
#include "mwkit/median.hpp"

namespace mwkit {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\"";
  return out;
}

inline const char* dot_palette(int i) {
  static const char* kColors[] = {"red",    "blue",   "forestgreen", "orange",
                                  "purple", "brown",  "deeppink",    "cadetblue",
                                  "gold3",  "gray40", "darkcyan",    "olive"};
  return kColors[i % (sizeof(kColors) / sizeof(kColors[0]))];
}

}  // namespace detail

// Plain graph export. With theta_colors set (median graphs only), edges of
// one Theta class share a color.
inline std::string export_dot(const Graph& g, bool theta_colors = false) {
  std::string out = "graph mwkit {\n";
  for (const auto& name : g.names()) out += "  " + detail::dot_quote(name) + ";\n";
  if (theta_colors) {
    std::vector<ThetaClass> classes = theta_classes(g);
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (auto [a, b] : classes[c].edges)
        out += "  " + detail::dot_quote(g.name(a)) + " -- " + detail::dot_quote(g.name(b)) +
               " [color=" + detail::dot_palette(static_cast<int>(c)) + "];\n";
  } else {
    for (auto [a, b] : g.edges())
      out += "  " + detail::dot_quote(g.name(a)) + " -- " + detail::dot_quote(g.name(b)) + ";\n";
  }
  out += "}\n";
  return out;
}

// Decomposition export: host nodes labelled with their bag contents
// (concatenated names, "{}" when empty).
inline std::string export_dot(const Decomposition& d, bool theta_colors = false) {
  std::string out = "graph mwkit {\n  node [shape=box];\n";
  for (int h = 0; h < d.host().vertex_count(); ++h) {
    std::string label;
    for (int v : d.bag(h)) label += d.subject().name(v);
    if (label.empty()) label = "{}";
    out += "  " + detail::dot_quote(d.host().name(h)) + " [label=" + detail::dot_quote(label) +
           "];\n";
  }
  const Graph& host = d.host();
  if (theta_colors && is_median(host)) {
    std::vector<ThetaClass> classes = theta_classes(host, false);
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (auto [a, b] : classes[c].edges)
        out += "  " + detail::dot_quote(host.name(a)) + " -- " + detail::dot_quote(host.name(b)) +
               " [color=" + detail::dot_palette(static_cast<int>(c)) + "];\n";
  } else {
    for (auto [a, b] : host.edges())
      out += "  " + detail::dot_quote(host.name(a)) + " -- " + detail::dot_quote(host.name(b)) +
             ";\n";
  }
  out += "}\n";
  return out;
}

// Embedding export: one cluster per factor tree; factor nodes are labelled
// with the host vertices they carry.
inline std::string export_dot(const Graph& m, const TreeProductEmbedding& e) {
  std::string out = "graph mwkit {\n";
  for (std::size_t j = 0; j < e.factors.size(); ++j) {
    const Graph& f = e.factors[j];
    out += "  subgraph cluster_" + std::to_string(j) + " {\n";
    out += "    label=\"factor " + std::to_string(j) + "\";\n";
    for (int t = 0; t < f.vertex_count(); ++t) {
      std::string fiber;
      for (int v = 0; v < m.vertex_count(); ++v)
        if (e.coords[v][j] == t) {
          if (!fiber.empty()) fiber += ",";
          fiber += m.name(v);
        }
      std::string id = "f" + std::to_string(j) + "_" + f.name(t);
      out += "    " + detail::dot_quote(id) + " [label=" +
             detail::dot_quote(f.name(t) + ": " + fiber) + "];\n";
    }
    for (auto [a, b] : f.edges()) {
      std::string ia = "f" + std::to_string(j) + "_" + f.name(a);
      std::string ib = "f" + std::to_string(j) + "_" + f.name(b);
      out += "    " + detail::dot_quote(ia) + " -- " + detail::dot_quote(ib) + ";\n";
    }
    out += "  }\n";
  }
  out += "}\n";
  return out;
}

}  // namespace mwkit
