#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "hgc/coloring.hpp"
#include "hgc/degeneracy.hpp"
#include "hgc/hypergraph.hpp"
#include "hgc/structure.hpp"

namespace fx {

using namespace hgc;

// "abc ab cd" -> vertices from every token, one edge per token of length >= 2.
// A leading "a b c |" lists extra vertices explicitly.
inline Hypergraph H(const std::string& spec) {
  std::vector<VertexId> vertices;
  std::vector<std::vector<VertexId>> edges;
  std::string edge_part = spec;
  auto bar = spec.find('|');
  if (bar != std::string::npos) {
    std::istringstream in(spec.substr(0, bar));
    for (std::string v; in >> v;) vertices.push_back(v);
    edge_part = spec.substr(bar + 1);
  }
  std::istringstream in(edge_part);
  for (std::string tok; in >> tok;) {
    std::vector<VertexId> e;
    for (char c : tok) {
      e.emplace_back(1, c);
      if (std::find(vertices.begin(), vertices.end(), e.back()) == vertices.end()) vertices.push_back(e.back());
    }
    edges.push_back(e);
  }
  return Hypergraph::build(vertices, edges);
}

inline ListAssignment lists(std::size_t n, std::vector<Color> colors) { return ListAssignment::constant(n, colors); }

inline Hypergraph bowtie() { return H("ab bc ca cd de ec"); }

// Every non-empty vertex set X has a vertex whose degree in H[X] is below bound.
inline bool degenerate_by_subsets(const Hypergraph& h, VertexMask within, const std::vector<unsigned>& bound) {
  for (VertexMask x = within; x; x = (x - 1) & within) {
    bool has_low = false;
    for_each_vertex(x, [&](VertexIndex v) { has_low = has_low || h.degree_within(v, x) < bound[v]; });
    if (!has_low) return false;
  }
  return true;
}

// The definition read literally: every subhypergraph (V', E' ⊆ E(H[V'])).
inline bool degenerate_by_subhypergraphs(const Hypergraph& h, const std::vector<unsigned>& bound) {
  const VertexMask all = h.all();
  for (VertexMask x = all; x; x = (x - 1) & all) {
    std::vector<VertexMask> inside;
    for (VertexMask e : h.edges()) {
      if (is_subset(e, x)) inside.push_back(e);
    }
    for (std::size_t pick = 0; pick < (std::size_t{1} << inside.size()); ++pick) {
      bool has_low = false;
      for_each_vertex(x, [&](VertexIndex v) {
        unsigned d = 0;
        for (std::size_t i = 0; i < inside.size(); ++i) d += ((pick >> i) & 1U) && contains(inside[i], v);
        has_low = has_low || d < bound[v];
      });
      if (!has_low) return false;
    }
  }
  return true;
}

// Tries every assignment of vertices to parts.
inline bool partitionable_by_brute_force(const Hypergraph& h, const VectorFunction& f) {
  const std::size_t n = h.order(), p = f.p();
  std::vector<std::size_t> part(n, 0);
  std::vector<std::vector<unsigned>> comps;
  for (std::size_t i = 0; i < p; ++i) comps.push_back(f.component(i));
  while (true) {
    std::vector<VertexMask> parts(p, 0);
    for (VertexIndex v = 0; v < n; ++v) parts[part[v]] |= bit(v);
    bool ok = true;
    for (std::size_t i = 0; ok && i < p; ++i) ok = degenerate_by_subsets(h, parts[i], comps[i]);
    if (ok) return true;
    std::size_t v = 0;
    while (v < n && part[v] + 1 == p) part[v++] = 0;
    if (v == n) return false;
    ++part[v];
  }
}

// Blocks by definition: maximal vertex sets inducing a connected hypergraph
// without separating vertex.
inline std::vector<VertexMask> blocks_by_subsets(const Hypergraph& h) {
  std::vector<VertexMask> good;
  for (VertexMask x = 1; x <= h.all() && h.order() > 0; ++x) {
    Hypergraph sub = induced(h, x);
    if (is_connected(sub) && separating_vertices(sub) == 0) good.push_back(x);
  }
  std::vector<VertexMask> maximal;
  for (VertexMask x : good) {
    bool dominated = false;
    for (VertexMask y : good) dominated = dominated || (y != x && is_subset(x, y));
    if (!dominated) maximal.push_back(x);
  }
  return maximal;
}

// Colorability by trying every L-coloring.
inline bool colorable_by_brute_force(const Hypergraph& h, const Property& p, const ListAssignment& l) {
  const std::size_t n = h.order();
  for (VertexIndex v = 0; v < n; ++v) {
    if (l.lists[v].empty()) return false;
  }
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    Coloring phi;
    for (VertexIndex v = 0; v < n; ++v) phi.colors.push_back(l.lists[v][pick[v]]);
    if (is_P_coloring(h, p, phi)) return true;
    std::size_t v = 0;
    while (v < n && pick[v] + 1 == l.lists[v].size()) pick[v++] = 0;
    if (v == n) return false;
    ++pick[v];
  }
}

}  // namespace fx
